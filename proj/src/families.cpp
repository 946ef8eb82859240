// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/families.hpp"

#include <stdexcept>

namespace ecmin {

namespace {

void check_arity(TorsionFamily t, const FamilyParams& p) {
    // d defaults to 1 and b to 0; reject obviously mismatched use.
    if (family_arity(t) < 3 && p.d != 1)
        throw DomainError("family takes no d parameter");
}

Rat rat(const Int& n) { return Rat(n); }

}  // namespace

std::string_view family_name(TorsionFamily t) {
    switch (t) {
        case TorsionFamily::C2: return "C2";
        case TorsionFamily::C3: return "C3";
        case TorsionFamily::C3_0: return "C3_0";
        case TorsionFamily::C4: return "C4";
        case TorsionFamily::C5: return "C5";
        case TorsionFamily::C6: return "C6";
        case TorsionFamily::C7: return "C7";
        case TorsionFamily::C8: return "C8";
        case TorsionFamily::C9: return "C9";
        case TorsionFamily::C10: return "C10";
        case TorsionFamily::C12: return "C12";
        case TorsionFamily::C2xC2: return "C2xC2";
        case TorsionFamily::C2xC4: return "C2xC4";
        case TorsionFamily::C2xC6: return "C2xC6";
        case TorsionFamily::C2xC8: return "C2xC8";
    }
    throw std::logic_error("unreachable");
}

std::optional<TorsionFamily> family_from_name(std::string_view name) {
    for (auto t : kAllFamilies)
        if (family_name(t) == name) return t;
    return std::nullopt;
}

int family_arity(TorsionFamily t) {
    switch (t) {
        case TorsionFamily::C3_0: return 1;
        case TorsionFamily::C2:
        case TorsionFamily::C2xC2: return 3;
        default: return 2;
    }
}

int family_order(TorsionFamily t) {
    switch (t) {
        case TorsionFamily::C2: return 2;
        case TorsionFamily::C3:
        case TorsionFamily::C3_0: return 3;
        case TorsionFamily::C4: return 4;
        case TorsionFamily::C5: return 5;
        case TorsionFamily::C6: return 6;
        case TorsionFamily::C7: return 7;
        case TorsionFamily::C8: return 8;
        case TorsionFamily::C9: return 9;
        case TorsionFamily::C10: return 10;
        case TorsionFamily::C12: return 12;
        case TorsionFamily::C2xC2: return 4;
        case TorsionFamily::C2xC4: return 8;
        case TorsionFamily::C2xC6: return 12;
        case TorsionFamily::C2xC8: return 16;
    }
    throw std::logic_error("unreachable");
}

int marked_point_order(TorsionFamily t) {
    switch (t) {
        case TorsionFamily::C2:
        case TorsionFamily::C2xC2: return 2;
        case TorsionFamily::C2xC4: return 4;
        case TorsionFamily::C2xC6: return 6;
        case TorsionFamily::C2xC8: return 8;
        case TorsionFamily::C3_0: return 3;
        default: return family_order(t);
    }
}

WeierstrassModel build_ET(TorsionFamily t, const FamilyParams& p) {
    check_arity(t, p);
    const Int &a = p.a, &b = p.b, &d = p.d;
    Int a1, a2, a3, a4;
    switch (t) {
        case TorsionFamily::C2:
            a2 = 2 * a;
            a4 = a * a - b * b * d;
            break;
        case TorsionFamily::C3_0:
            a3 = a;
            break;
        case TorsionFamily::C3:
            a1 = a;
            a3 = a * a * b;
            break;
        case TorsionFamily::C4:
            a1 = a;
            a2 = -a * b;
            a3 = -a * a * b;
            break;
        case TorsionFamily::C5:
            a1 = a - b;
            a2 = -a * b;
            a3 = -a * a * b;
            break;
        case TorsionFamily::C6:
            a1 = a - b;
            a2 = -a * b - b * b;
            a3 = -a * a * b - a * b * b;
            break;
        case TorsionFamily::C7:
            a1 = a * a + a * b - b * b;
            a2 = a * b * b * (a - b);
            a3 = a * a * a2;
            break;
        case TorsionFamily::C8:
            a1 = -a * a + 4 * a * b - 2 * b * b;
            a2 = -b * b * (a - b) * (a - 2 * b);
            a3 = a * b * a2;
            break;
        case TorsionFamily::C9:
            a1 = a * a * a + a * b * b - b * b * b;
            a2 = a * b * b * (a * a * a - 2 * a * a * b + 2 * a * b * b - b * b * b);
            a3 = a * a * a * a2;
            break;
        case TorsionFamily::C10:
            a1 = a * a * a - 2 * a * a * b - 2 * a * b * b + 2 * b * b * b;
            a2 = -a * b * b * b * (a - b) * (a - 2 * b);
            a3 = (a * a * a - 3 * a * a * b + a * b * b) * a2;
            break;
        case TorsionFamily::C12: {
            const Int a_2 = a * a, b_2 = b * b;
            a1 = -a_2 * a_2 + 2 * a * a_2 * b + 2 * a_2 * b_2 - 8 * a * b * b_2 +
                 6 * b_2 * b_2;
            a2 = b * (a - 2 * b) * (a - b) * (a - b) * (a_2 - 3 * a * b + 3 * b_2) *
                 (a_2 - 2 * a * b + 2 * b_2);
            a3 = a * (b - a) * (b - a) * (b - a) * a2;
            break;
        }
        case TorsionFamily::C2xC2:
            a2 = a * d + b * d;
            a4 = a * b * d * d;
            break;
        case TorsionFamily::C2xC4:
            a1 = a;
            a2 = -a * b - 4 * b * b;
            a3 = -a * a * b - 4 * a * b * b;
            break;
        case TorsionFamily::C2xC6: {
            const Int a_2 = a * a, b_2 = b * b;
            a1 = -19 * a_2 + 2 * a * b + b_2;
            a2 = -10 * a_2 * a_2 + 22 * a * a_2 * b - 14 * a_2 * b_2 + 2 * a * b * b_2;
            a3 = 90 * a_2 * a_2 * a_2 - 198 * a * a_2 * a_2 * b +
                 116 * a_2 * a_2 * b_2 + 4 * a * a_2 * b * b_2 - 14 * a_2 * b_2 * b_2 +
                 2 * a * b * b_2 * b_2;
            break;
        }
        case TorsionFamily::C2xC8: {
            const Int a_2 = a * a, b_2 = b * b;
            a1 = -a_2 * a_2 - 8 * a * a_2 * b - 24 * a_2 * b_2 + 64 * b_2 * b_2;
            a2 = -4 * a * b_2 * (a + 2 * b) * (a + 4 * b) * (a + 4 * b) *
                 (a_2 + 4 * a * b + 8 * b_2);
            a3 = -2 * b * (a + 4 * b) * (a_2 - 8 * b_2) * a2;
            break;
        }
    }
    return {rat(a1), rat(a2), rat(a3), rat(a4), Rat(0)};
}

FamilyInvariants family_invariants(TorsionFamily t, const FamilyParams& p) {
    check_arity(t, p);
    const Int &a = p.a, &b = p.b, &d = p.d;
    const Int a2 = a * a, b2 = b * b;
    const Int a3 = a2 * a, b3 = b2 * b;
    const Int a4 = a2 * a2, b4 = b2 * b2;
    FamilyInvariants inv;
    switch (t) {
        case TorsionFamily::C2:
            inv.alpha = 16 * (3 * b2 * d + a2);
            inv.beta = -64 * a * (9 * b2 * d - a2);
            inv.gamma = 64 * b2 * d * (b2 * d - a2) * (b2 * d - a2);
            break;
        case TorsionFamily::C3_0:
            inv.alpha = 0;
            inv.beta = -216 * a2;
            inv.gamma = -27 * a4;
            break;
        case TorsionFamily::C3:
            inv.alpha = a3 * (a - 24 * b);
            inv.beta = a4 * (-a2 + 36 * a * b - 216 * b2);
            inv.gamma = a4 * a4 * b3 * (a - 27 * b);
            break;
        case TorsionFamily::C4:
            inv.alpha = a2 * (a2 + 16 * a * b + 16 * b2);
            inv.beta = a3 * (a + 8 * b) * (-a2 - 16 * a * b + 8 * b2);
            inv.gamma = a4 * a3 * b4 * (a + 16 * b);
            break;
        case TorsionFamily::C5:
            inv.alpha = a4 + 12 * a3 * b + 14 * a2 * b2 - 12 * a * b3 + b4;
            inv.beta = -(a2 + b2) * (a4 + 18 * a3 * b + 74 * a2 * b2 - 18 * a * b3 + b4);
            inv.gamma = pow_int(a * b, 5) * (-a2 - 11 * a * b + b2);
            break;
        case TorsionFamily::C6:
            inv.alpha = (a + 3 * b) * (a3 + 9 * a2 * b + 3 * a * b2 + 3 * b3);
            inv.beta = -(a2 + 6 * a * b - 3 * b2) *
                       (a4 + 12 * a3 * b + 30 * a2 * b2 + 36 * a * b3 + 9 * b4);
            inv.gamma = a2 * pow_int(b, 6) * (a + 9 * b) * pow_int(a + b, 3);
            break;
        case TorsionFamily::C7:
            inv.alpha = (a2 - a * b + b2) *
                        (a4 * a2 + 5 * a4 * a * b - 10 * a4 * b2 - 15 * a3 * b3 +
                         30 * a2 * b4 - 11 * a * b4 * b + b4 * b2);
            inv.beta = -(a4 * a4 * a4 + 6 * a4 * a4 * a3 * b - 15 * a4 * a4 * a2 * b2 -
                         46 * a4 * a4 * a * b3 + 174 * a4 * a4 * b4 -
                         222 * a4 * a3 * b4 * b + 273 * a3 * a3 * b3 * b3 -
                         486 * a4 * a * b4 * b3 + 570 * a4 * b4 * b4 -
                         354 * a3 * b4 * b4 * b + 117 * a2 * b4 * b4 * b2 -
                         18 * a * b4 * b4 * b3 + b4 * b4 * b4);
            inv.gamma = pow_int(a * b, 7) * pow_int(b - a, 7) *
                        (a3 + 5 * a2 * b - 8 * a * b2 + b3);
            break;
        case TorsionFamily::C8:
            inv.alpha = a4 * a4 - 16 * a4 * a3 * b + 96 * a4 * a2 * b2 -
                        288 * a4 * a * b3 + 480 * a4 * b4 - 448 * a3 * b4 * b +
                        224 * a2 * b4 * b2 - 64 * a * b4 * b3 + 16 * b4 * b4;
            inv.beta = -(a4 - 8 * a3 * b + 16 * a2 * b2 - 16 * a * b3 + 8 * b4) *
                       (a4 * a4 - 16 * a4 * a3 * b + 96 * a4 * a2 * b2 -
                        288 * a4 * a * b3 + 456 * a4 * b4 - 352 * a3 * b4 * b +
                        80 * a2 * b4 * b2 + 32 * a * b4 * b3 - 8 * b4 * b4);
            inv.gamma = a2 * pow_int(b, 8) * pow_int(a - 2 * b, 4) * pow_int(a - b, 8) *
                        (a2 - 8 * a * b + 8 * b2);
            break;
        case TorsionFamily::C9: {
            const Int t2 = a2 - a * b + b2;
            inv.alpha = (a3 - 3 * a * b2 + b3) *
                        (pow_int(a, 9) - 9 * pow_int(a, 7) * b2 + 27 * pow_int(a, 6) * b3 -
                         45 * pow_int(a, 5) * b4 + 54 * a4 * b4 * b - 48 * a3 * b4 * b2 +
                         27 * a2 * b4 * b3 - 9 * a * b4 * b4 + b4 * b4 * b);
            inv.beta = -(pow_int(a, 18) - 18 * pow_int(a, 16) * b2 +
                         42 * pow_int(a, 15) * b3 + 27 * pow_int(a, 14) * b4 -
                         306 * pow_int(a, 13) * b4 * b + 735 * pow_int(a, 12) * b4 * b2 -
                         1080 * pow_int(a, 11) * b4 * b3 + 1359 * pow_int(a, 10) * b4 * b4 -
                         2032 * pow_int(a, 9) * pow_int(b, 9) +
                         3240 * pow_int(a, 8) * pow_int(b, 10) -
                         4230 * pow_int(a, 7) * pow_int(b, 11) +
                         4128 * pow_int(a, 6) * pow_int(b, 12) -
                         2970 * pow_int(a, 5) * pow_int(b, 13) +
                         1557 * a4 * pow_int(b, 14) - 570 * a3 * pow_int(b, 15) +
                         135 * a2 * pow_int(b, 16) - 18 * a * pow_int(b, 17) +
                         pow_int(b, 18));
            inv.gamma = pow_int(a * b, 9) * pow_int(b - a, 9) * pow_int(t2, 3) *
                        (a3 + 3 * a2 * b - 6 * a * b2 + b3);
            break;
        }
        case TorsionFamily::C10:
            inv.alpha = pow_int(a, 12) - 8 * pow_int(a, 11) * b +
                        16 * pow_int(a, 10) * b2 + 40 * pow_int(a, 9) * b3 -
                        240 * pow_int(a, 8) * b4 + 432 * pow_int(a, 7) * b4 * b -
                        256 * pow_int(a, 6) * b4 * b2 - 288 * pow_int(a, 5) * b4 * b3 +
                        720 * a4 * b4 * b4 - 720 * a3 * pow_int(b, 9) +
                        416 * a2 * pow_int(b, 10) - 128 * a * pow_int(b, 11) +
                        16 * pow_int(b, 12);
            inv.beta = -(a2 - 2 * a * b + 2 * b2) * (a4 - 2 * a3 * b + 2 * b4) *
                       (a4 - 2 * a3 * b - 6 * a2 * b2 + 12 * a * b3 - 4 * b4) *
                       (pow_int(a, 8) - 6 * pow_int(a, 7) * b + 4 * pow_int(a, 6) * b2 +
                        48 * pow_int(a, 5) * b3 - 146 * a4 * b4 + 176 * a3 * b4 * b -
                        104 * a2 * b4 * b2 + 32 * a * b4 * b3 - 4 * b4 * b4);
            inv.gamma = pow_int(a, 5) * pow_int(b, 10) * pow_int(a - 2 * b, 5) *
                        pow_int(a - b, 10) * (a2 + 2 * a * b - 4 * b2) *
                        pow_int(a2 - 3 * a * b + b2, 2);
            break;
        case TorsionFamily::C12:
            inv.alpha = (a4 - 6 * a3 * b + 12 * a2 * b2 - 12 * a * b3 + 6 * b4) *
                        (pow_int(a, 12) - 18 * pow_int(a, 11) * b +
                         144 * pow_int(a, 10) * b2 - 684 * pow_int(a, 9) * b3 +
                         2154 * pow_int(a, 8) * b4 - 4728 * pow_int(a, 7) * b4 * b +
                         7368 * pow_int(a, 6) * b4 * b2 - 8112 * pow_int(a, 5) * b4 * b3 +
                         6132 * a4 * b4 * b4 - 3000 * a3 * pow_int(b, 9) +
                         864 * a2 * pow_int(b, 10) - 144 * a * pow_int(b, 11) +
                         24 * pow_int(b, 12));
            inv.beta = -(pow_int(a, 8) - 12 * pow_int(a, 7) * b + 60 * pow_int(a, 6) * b2 -
                         168 * pow_int(a, 5) * b3 + 288 * a4 * b4 - 312 * a3 * b4 * b +
                         216 * a2 * b4 * b2 - 96 * a * b4 * b3 + 24 * b4 * b4) *
                       (pow_int(a, 16) - 24 * pow_int(a, 15) * b +
                        264 * pow_int(a, 14) * b2 - 1776 * pow_int(a, 13) * b3 +
                        8208 * pow_int(a, 12) * b4 - 27696 * pow_int(a, 11) * b4 * b +
                        70632 * pow_int(a, 10) * b4 * b2 -
                        138720 * pow_int(a, 9) * b4 * b3 +
                        211296 * pow_int(a, 8) * b4 * b4 -
                        248688 * pow_int(a, 7) * pow_int(b, 9) +
                        222552 * pow_int(a, 6) * pow_int(b, 10) -
                        146304 * pow_int(a, 5) * pow_int(b, 11) +
                        65880 * a4 * pow_int(b, 12) - 17136 * a3 * pow_int(b, 13) +
                        1008 * a2 * pow_int(b, 14) + 576 * a * pow_int(b, 15) -
                        72 * pow_int(b, 16));
            inv.gamma = a2 * pow_int(b, 12) * pow_int(a - 2 * b, 6) * pow_int(a - b, 12) *
                        (a2 - 6 * a * b + 6 * b2) * pow_int(a2 - 2 * a * b + 2 * b2, 3) *
                        pow_int(a2 - 3 * a * b + 3 * b2, 4);
            break;
        case TorsionFamily::C2xC2:
            inv.alpha = 16 * d * d * (a2 - a * b + b2);
            inv.beta = -32 * d * d * d * (a + b) * (a - 2 * b) * (2 * a - b);
            inv.gamma = 16 * a2 * b2 * pow_int(d, 6) * (a - b) * (a - b);
            break;
        case TorsionFamily::C2xC4:
            inv.alpha = a4 + 16 * a3 * b + 80 * a2 * b2 + 128 * a * b3 + 256 * b4;
            inv.beta = -(a2 + 8 * a * b - 16 * b2) * (a2 + 8 * a * b + 8 * b2) *
                       (a2 + 8 * a * b + 32 * b2);
            inv.gamma = a2 * b4 * pow_int(a + 8 * b, 2) * pow_int(a + 4 * b, 4);
            break;
        case TorsionFamily::C2xC6:
            inv.alpha = (21 * a2 - 6 * a * b + b2) *
                        (6861 * a4 * a2 - 2178 * a4 * a * b - 825 * a4 * b2 +
                         180 * a3 * b3 + 75 * a2 * b4 - 18 * a * b4 * b + b4 * b2);
            inv.beta = -(183 * a4 - 36 * a3 * b - 30 * a2 * b2 + 12 * a * b3 - b4) *
                       (393 * a4 - 156 * a3 * b + 30 * a2 * b2 - 12 * a * b3 + b4) *
                       (759 * a4 - 228 * a3 * b - 30 * a2 * b2 + 12 * a * b3 - b4);
            inv.gamma = pow_int(2 * a, 6) * pow_int(b - 9 * a, 2) * pow_int(b - 3 * a, 2) *
                        pow_int(3 * a + b, 2) * pow_int(b - 5 * a, 6) *
                        pow_int(b - a, 6);
            break;
        case TorsionFamily::C2xC8: {
            const Int p8 = pow_int(a, 8) + 16 * pow_int(a, 7) * b +
                           96 * pow_int(a, 6) * b2 + 256 * pow_int(a, 5) * b3;
            inv.alpha = pow_int(a, 16) + 32 * pow_int(a, 15) * b +
                        448 * pow_int(a, 14) * b2 + 3584 * pow_int(a, 13) * b3 +
                        17664 * pow_int(a, 12) * b4 + 51200 * pow_int(a, 11) * b4 * b +
                        51200 * pow_int(a, 10) * b4 * b2 -
                        237568 * pow_int(a, 9) * b4 * b3 -
                        1183744 * pow_int(a, 8) * b4 * b4 -
                        1900544 * pow_int(a, 7) * pow_int(b, 9) +
                        3276800 * pow_int(a, 6) * pow_int(b, 10) +
                        26214400 * pow_int(a, 5) * pow_int(b, 11) +
                        72351744 * a4 * pow_int(b, 12) +
                        117440512 * a3 * pow_int(b, 13) +
                        117440512 * a2 * pow_int(b, 14) +
                        67108864 * a * pow_int(b, 15) + 16777216 * pow_int(b, 16);
            inv.beta = -(p8 - 256 * a4 * b4 - 4096 * a3 * b4 * b - 12288 * a2 * b4 * b2 -
                         16384 * a * b4 * b3 - 8192 * b4 * b4) *
                       (p8 + 128 * a4 * b4 - 1024 * a3 * b4 * b - 3072 * a2 * b4 * b2 -
                        4096 * a * b4 * b3 - 2048 * b4 * b4) *
                       (p8 + 512 * a4 * b4 + 2048 * a3 * b4 * b + 6144 * a2 * b4 * b2 +
                        8192 * a * b4 * b3 + 4096 * b4 * b4);
            inv.gamma = pow_int(2 * a * b, 8) * pow_int(a + 2 * b, 8) *
                        pow_int(a + 4 * b, 8) * pow_int(a2 - 8 * b2, 2) *
                        pow_int(a2 + 8 * a * b + 8 * b2, 2) *
                        pow_int(a2 + 4 * a * b + 8 * b2, 4);
            break;
        }
    }
    return inv;
}

std::pair<Rat, Rat> universal_fg(TorsionFamily t, const Rat& tv) {
    const Rat t2 = tv * tv, t3 = t2 * tv;
    switch (t) {
        case TorsionFamily::C4:
            return {tv, Rat(0)};
        case TorsionFamily::C5:
            return {tv, tv};
        case TorsionFamily::C6:
            return {t2 + tv, tv};
        case TorsionFamily::C7:
            return {t3 - t2, t2 - tv};
        case TorsionFamily::C8:
            if (tv == 0) throw DomainError("universal_curve: parameter outside domain");
            return {2 * t2 - 3 * tv + 1, (2 * t2 - 3 * tv + 1) / tv};
        case TorsionFamily::C9:
            return {t3 * t2 - 2 * t2 * t2 + 2 * t3 - t2, t3 - t2};
        case TorsionFamily::C10: {
            const Rat q = t2 - 3 * tv + 1;
            if (q == 0) throw DomainError("universal_curve: parameter outside domain");
            return {(2 * t3 * t2 - 3 * t2 * t2 + t3) / (q * q),
                    (-2 * t3 + 3 * t2 - tv) / q};
        }
        case TorsionFamily::C12: {
            const Rat q = tv - 1;
            if (q == 0) throw DomainError("universal_curve: parameter outside domain");
            const Rat q2 = q * q;
            return {(12 * t3 * t3 - 30 * t3 * t2 + 34 * t2 * t2 - 21 * t3 + 7 * t2 - tv) /
                        (q2 * q2),
                    (-6 * t2 * t2 + 9 * t3 - 5 * t2 + tv) / (q2 * q)};
        }
        case TorsionFamily::C2xC4:
            return {4 * t2 + tv, Rat(0)};
        case TorsionFamily::C2xC6: {
            const Rat q = (tv + 3) * (tv - 3);
            if (q == 0) throw DomainError("universal_curve: parameter outside domain");
            return {(-2 * t3 + 14 * t2 - 22 * tv + 10) / (q * q), (-2 * tv + 10) / q};
        }
        case TorsionFamily::C2xC8: {
            const Rat num = 16 * t3 + 16 * t2 + 6 * tv + 1;
            const Rat q = 8 * t2 - 1;
            const Rat r = 2 * tv * (4 * tv + 1);
            if (q == 0 || r == 0)
                throw DomainError("universal_curve: parameter outside domain");
            return {num / (q * q), num / (r * q)};
        }
        default:
            throw DomainError("universal curve not defined for this family");
    }
}

WeierstrassModel universal_curve(TorsionFamily t, const Rat& tval) {
    WeierstrassModel m;
    if (t == TorsionFamily::C3) {
        m = {Rat(1), Rat(0), tval, Rat(0), Rat(0)};
    } else {
        const auto [f, g] = universal_fg(t, tval);
        m = {1 - g, -f, -f, Rat(0), Rat(0)};
    }
    if (invariants(m).disc == 0)
        throw DomainError("universal_curve: cusp/singular parameter");
    return m;
}

Int rescale_factor_wT(TorsionFamily t, const Int& a, const Int& b) {
    Int w;
    switch (t) {
        case TorsionFamily::C3:
        case TorsionFamily::C4:
        case TorsionFamily::C5:
        case TorsionFamily::C6:
        case TorsionFamily::C2xC4:
            w = a;
            break;
        case TorsionFamily::C7:
            w = a * a;
            break;
        case TorsionFamily::C8:
            w = a * b;
            break;
        case TorsionFamily::C9:
            w = a * a * a;
            break;
        case TorsionFamily::C10:
            w = a * (a * a - 3 * a * b + b * b);
            break;
        case TorsionFamily::C12:
            w = a * pow_int(b - a, 3);
            break;
        case TorsionFamily::C2xC6:
            w = -9 * a * a + b * b;
            break;
        case TorsionFamily::C2xC8:
            w = 2 * b * (a + 4 * b) * (-a * a + 8 * b * b);
            break;
        default:
            throw DomainError("w_T not defined for this family");
    }
    if (w == 0) throw DomainError("w_T vanishes: degenerate isomorphism");
    return w;
}

DeltaConstant delta_constant(TorsionFamily t) {
    switch (t) {
        case TorsionFamily::C3: return {6, 'a'};
        case TorsionFamily::C4: return {2, 'a'};
        case TorsionFamily::C5: return {5, 0};
        case TorsionFamily::C6: return {6, 0};
        case TorsionFamily::C7: return {7, 0};
        case TorsionFamily::C8: return {2, 0};
        case TorsionFamily::C9: return {3, 0};
        case TorsionFamily::C10: return {10, 0};
        case TorsionFamily::C12: return {6, 0};
        case TorsionFamily::C2: return {2, 'd'};
        case TorsionFamily::C2xC2: return {2, 'd'};
        case TorsionFamily::C2xC4: return {2, 0};
        case TorsionFamily::C2xC6: return {6, 0};
        case TorsionFamily::C2xC8: return {2, 0};
        default: throw DomainError("delta_T not defined for this family");
    }
}

}  // namespace ecmin

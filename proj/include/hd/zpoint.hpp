#pragma once

#include <cstddef>

#include "hd/map.hpp"
#include "hd/rational.hpp"

namespace hd {

// Shared-denominator plane point: x = a/m, y = c/m with m > 0, not kept in
// lowest terms. One map step is a handful of big-integer multiplies and no
// gcd, which is what makes deep exact orbits affordable; reduction buys
// almost nothing here because the iterates are generically coprime.
struct zpoint {
    mpz_class a, c, m;

    static zpoint from(const rpoint& p) {
        zpoint z;
        mpz_lcm(z.m.get_mpz_t(), p.x.get_den().get_mpz_t(), p.y.get_den().get_mpz_t());
        z.a = p.x.get_num() * (z.m / p.x.get_den());
        z.c = p.y.get_num() * (z.m / p.y.get_den());
        return z;
    }

    rpoint to_rpoint() const {
        rat x(a, m), y(c, m);
        x.canonicalize();
        y.canonicalize();
        return {x, y};
    }

    std::size_t bits() const { return bit_size(a) + bit_size(c) + bit_size(m); }

    int y_sign() const { return sgn(c); }
    int xy_sum_sign() const {
        mpz_class s = a + c;
        return sgn(s);
    }

    // (x, y) -> (x + 1/y, y - 1/y - x); requires c != 0.
    void step_forward() {
        mpz_class m2 = m * m, ac = a * c;
        mpz_class A = ac + m2;
        mpz_class C = c * c - m2 - ac;
        mpz_class M = m * c;
        if (sgn(M) < 0) {
            mpz_neg(M.get_mpz_t(), M.get_mpz_t());
            mpz_neg(A.get_mpz_t(), A.get_mpz_t());
            mpz_neg(C.get_mpz_t(), C.get_mpz_t());
        }
        a = A; c = C; m = M;
    }

    // (x, y) -> (x - 1/(x+y), x + y); requires a + c != 0.
    void step_backward() {
        mpz_class s = a + c;
        mpz_class A = a * s - m * m;
        mpz_class C = s * s;
        mpz_class M = m * s;
        if (sgn(M) < 0) {
            mpz_neg(M.get_mpz_t(), M.get_mpz_t());
            mpz_neg(A.get_mpz_t(), A.get_mpz_t());
            mpz_neg(C.get_mpz_t(), C.get_mpz_t());
        }
        a = A; c = C; m = M;
    }
};

}  // namespace hd

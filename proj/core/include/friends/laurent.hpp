#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "friends/abelian.hpp"
#include "friends/group.hpp"

namespace friends {

// Integer Laurent polynomial in one variable t. Stored as a dense coefficient
// block starting at the lowest exponent; always trimmed.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(Int constant) {
        if (constant != 0) { lo_ = 0; c_ = {std::move(constant)}; }
    }
    static Laurent monomial(Int coeff, int exp) {
        Laurent p;
        if (coeff != 0) { p.lo_ = exp; p.c_ = {std::move(coeff)}; }
        return p;
    }

    bool zero() const { return c_.empty(); }
    bool isUnit() const;  // +-t^k
    int lowExp() const { return lo_; }
    int highExp() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int span() const { return zero() ? 0 : static_cast<int>(c_.size()); }
    Int coeff(int exp) const {
        int i = exp - lo_;
        if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
        return c_[i];
    }
    const std::vector<Int>& coeffs() const { return c_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;

    Int evaluate(const Int& x) const;  // requires lo_ >= 0 or x = +-1
    Laurent mirrored() const;          // t -> 1/t

    // Normal form up to units: lowest exponent 0, positive leading
    // coefficient. Idempotent.
    Laurent normalizedUnits() const;
    bool palindromic() const;  // p(t) == +-t^k p(1/t) after normalization

    friend bool operator==(const Laurent&, const Laurent&) = default;
    std::string str() const;

    static Laurent gcd(Laurent a, Laurent b);

private:
    void trim();
    int lo_ = 0;
    std::vector<Int> c_;
};

struct NotInfiniteCyclic : std::runtime_error {
    NotInfiniteCyclic() : std::runtime_error("abelianization is not Z") {}
};

// Fox-calculus Alexander polynomial: the gcd of the codimension-1 minors of
// the abelianized Jacobian, normalized up to units. `phi` maps each
// generator to its exponent in H1 = Z.
Laurent alexanderPolynomial(const GroupPresentation& p, const std::vector<Int>& phi);

// Convenience: computes the abelianization map itself, throwing
// NotInfiniteCyclic when H1 is not infinite cyclic. Simplifies the
// presentation first to keep the minor expansion small.
Laurent alexanderPolynomial(const GroupPresentation& p);

}  // namespace friends

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mercode/field.hpp"
#include "mercode/ntt.hpp"
#include "mercode/rng.hpp"

namespace mercode {

// Dense univariate polynomial over F_p, coefficients low-degree-first,
// normalized: no trailing zeros, so the zero polynomial is the empty vector.
using Poly = std::vector<u32>;

// Degree of the zero polynomial. A sentinel far below any real degree so that
// comparisons work without special-casing; never do arithmetic on it.
constexpr i64 kZeroPolyDeg = std::numeric_limits<i64>::min();

void poly_trim(Poly& f);
inline bool poly_is_zero(const Poly& f) { return f.empty(); }
inline i64 poly_deg(const Poly& f) { return f.empty() ? kZeroPolyDeg : i64(f.size()) - 1; }
inline u32 poly_coeff(const Poly& f, size_t i) { return i < f.size() ? f[i] : 0; }
inline u32 poly_lead(const Poly& f) { return f.empty() ? 0 : f.back(); }

Poly poly_add(const Poly& a, const Poly& b, const Field& F);
Poly poly_sub(const Poly& a, const Poly& b, const Field& F);
Poly poly_neg(const Poly& a, const Field& F);
Poly poly_scale(const Poly& a, u32 c, const Field& F);
// a * x^k
Poly poly_shift_up(const Poly& a, size_t k);
// a / x^k, dropping the low coefficients
Poly poly_shift_down(const Poly& a, size_t k);

Poly poly_mul(const Poly& a, const Poly& b, const Field& F);
// a * b mod x^k
Poly poly_mul_trunc(const Poly& a, const Poly& b, size_t k, const Field& F);
Poly poly_trunc(Poly a, size_t k);

u32 poly_eval(const Poly& f, u32 x, const Field& F);

Poly poly_derivative(const Poly& f, const Field& F);
// f, f', ..., f^(kmax)
std::vector<Poly> derivative_batch(const Poly& f, int kmax, const Field& F);

// Inverse power series of f mod x^k (Newton). Throws NotInvertible if f(0)=0.
Poly poly_inv_series(const Poly& f, size_t k, const Field& F);

struct PolyDivMod {
    Poly quot, rem;
};
// Throws DivisionByZero when b is zero.
PolyDivMod poly_divmod(const Poly& a, const Poly& b, const Field& F);
Poly poly_mod(const Poly& a, const Poly& b, const Field& F);
Poly poly_div(const Poly& a, const Poly& b, const Field& F);
// Division with a precomputed inverse of rev(b) mod x^K; requires
// deg a - deg b + 1 <= K.
PolyDivMod poly_divmod_pre(const Poly& a, const Poly& b, const Poly& rev_b_inv, const Field& F);

// Monic gcd (Euclid; inputs stay small wherever this is used).
Poly poly_gcd(Poly a, Poly b, const Field& F);
// base^e mod m
Poly poly_powmod(const Poly& base, u64 e, const Poly& m, const Field& F);

// f(x + c). Throws CharacteristicTooSmall when deg f >= p.
Poly taylor_shift(const Poly& f, u32 c, const Field& F);

// prod_i (x - points[i])^mult. Repeated points merge into higher multiplicity.
Poly vanishing_poly(const std::vector<u32>& points, int mult, const Field& F);

// Uniform random polynomial of degree <= deg (may be lower if the top
// coefficient draws zero); deg < 0 gives the zero polynomial.
Poly random_poly(const Field& F, i64 deg, Rng& rng);

// Factorial tables mod p. Throws CharacteristicTooSmall when n >= p.
struct Factorials {
    std::vector<u32> fact, inv_fact;
};
const Factorials& factorials(const Field& F, size_t n);
u32 binomial(const Field& F, u64 n, u64 k);
// Falling factorial n(n-1)...(n-j+1) mod p for n given as a residue.
u32 falling_factorial(const Field& F, u32 n, u64 j);

// Subproduct tree. levels[0] are the leaf polynomials, each higher level
// holds adjacent-pair products (odd node promoted unchanged), levels.back()
// is the full product.
struct ProductTree {
    std::vector<std::vector<Poly>> levels;
    // Inverse of rev(node) mod x^(needed precision), filled by ensure_inverses.
    std::vector<std::vector<Poly>> inv_levels;

    static ProductTree build(std::vector<Poly> leaves, const Field& F);
    const Poly& root() const { return levels.back()[0]; }
    size_t leaf_count() const { return levels[0].size(); }

    // Precompute Newton inverses so repeated remainder pushes cost two
    // multiplications per node instead of a fresh Newton iteration.
    void ensure_inverses(const Field& F);

    // f mod each leaf, via top-down remaindering.
    std::vector<Poly> remainders(const Poly& f, const Field& F) const;

    // sum_j c[j] * prod_{i != j} leaf_i  (linear combination up the tree).
    Poly combine(const std::vector<Poly>& c, const Field& F) const;
};

// f(points[i]) for all i. Points need not be distinct.
std::vector<u32> multipoint_eval(const Poly& f, const std::vector<u32>& points, const Field& F);

// Unique f of degree < n with f(points[i]) = values[i]. Throws DuplicatePoint.
Poly interpolate(const std::vector<u32>& points, const std::vector<u32>& values, const Field& F);

// Hermite interpolation with uniform multiplicity s: the unique A of degree
// < s*n with A^(k)(points[j]) = values[j][k] for k < s. The point-dependent
// work (trees, local inverse factors) is done once at construction and
// reused for every right-hand side.
class HermiteSystem {
public:
    HermiteSystem(std::vector<u32> points, int s, const Field& F);

    Poly interpolate(const std::vector<std::vector<u32>>& values, const Field& F) const;

    // A mod (x - points[j])^s for all j in local Taylor form: coefficient k
    // of entry j is the k-th Taylor coefficient of A at points[j]
    // (= A^(k)(points[j]) / k!).
    std::vector<Poly> taylor_remainders(const Poly& a, const Field& F) const;

    const std::vector<u32>& points() const { return pts_; }
    int multiplicity() const { return s_; }
    const ProductTree& tree() const { return tree_; }

private:
    std::vector<u32> pts_;
    int s_;
    ProductTree tree_;             // leaves (x - a_j)^s
    std::vector<Poly> inv_factor_;  // ((E/(x-a_j))^s)^{-1} mod x^s in local coords
};

Poly hermite_interpolate(const std::vector<u32>& points,
                         const std::vector<std::vector<u32>>& values, int s, const Field& F);

}  // namespace mercode

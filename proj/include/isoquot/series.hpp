#pragma once

#include "isoquot/cyclo.hpp"
#include "isoquot/errors.hpp"
#include "isoquot/rational.hpp"

#include <string>
#include <vector>

namespace isoquot {

// Truncated power series in q_0..q_{k-1} (per-variable truncation orders)
// with an extra untruncated polynomial variable t. Dense storage.
template <class K>
class MultiSeries {
public:
    MultiSeries() : MultiSeries(std::vector<int>{}) {}
    explicit MultiSeries(std::vector<int> orders, int tdeg = 0);

    static MultiSeries constant(const std::vector<int>& orders, const K& c);
    static MultiSeries variable(const std::vector<int>& orders, int i);
    static MultiSeries t_variable(const std::vector<int>& orders);
    // (1+q_i)^alpha, truncated at the order of q_i.
    static MultiSeries binomial(const std::vector<int>& orders, int i, const Rational& alpha);
    // (c + sum_i a_i q_i)^e for integer e; c must be nonzero when e < 0.
    static MultiSeries linear_power(const std::vector<int>& orders, const K& c,
                                    const std::vector<K>& a, long e);

    int nvars() const { return static_cast<int>(ord_.size()); }
    const std::vector<int>& orders() const { return ord_; }
    int order(int i) const { return ord_[static_cast<size_t>(i)]; }
    int t_degree() const; // actual degree in t (-1 for zero)
    bool is_t_free() const { return t_degree() <= 0; }
    bool all_zero() const;

    K coefficient(const std::vector<int>& e, int te = 0) const;
    K constant_term() const { return c_.empty() ? K(0) : c_[0]; }
    void add_to(const std::vector<int>& e, int te, const K& v);

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    MultiSeries& operator*=(const K& s);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator-(MultiSeries a) { return a *= K(-1); }
    friend MultiSeries operator*(MultiSeries a, const K& s) { return a *= s; }
    friend MultiSeries operator*(const K& s, MultiSeries a) { return a *= s; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return a.mul(b); }
    MultiSeries& operator*=(const MultiSeries& o) { return *this = mul(o); }

    MultiSeries mul(const MultiSeries& o) const;
    MultiSeries invert() const;            // NonUnitConstantTerm; requires t-free
    MultiSeries pow(long e) const;
    MultiSeries derive(int i) const;       // d/dq_i
    MultiSeries euler(int i) const;        // q_i d/dq_i
    MultiSeries derive_t() const;
    MultiSeries eval_t(const K& t) const;
    // Substitute q_j -> q_i; the merged variable is truncated at min(order_i, order_j)
    // and q_j is removed.
    MultiSeries diagonal(int i, int j) const;

    // Visit nonzero terms as (exponents, t-exponent, coefficient).
    template <class F>
    void for_each(F&& f) const {
        std::vector<int> e(ord_.size(), 0);
        for (size_t idx = 0; idx < qsize_; ++idx) {
            decode(idx, e);
            for (int te = 0; te <= tdeg_; ++te) {
                const K& v = c_[idx * static_cast<size_t>(tdeg_ + 1) + static_cast<size_t>(te)];
                if (!isoquot::is_zero(v)) f(e, te, v);
            }
        }
    }

private:
    void init_strides();
    void decode(size_t idx, std::vector<int>& e) const;
    size_t index(const std::vector<int>& e) const;
    K& at(size_t qidx, int te) { return c_[qidx * static_cast<size_t>(tdeg_ + 1) + static_cast<size_t>(te)]; }
    const K& at(size_t qidx, int te) const { return c_[qidx * static_cast<size_t>(tdeg_ + 1) + static_cast<size_t>(te)]; }
    void shrink_t();
    void check_same_vars(const MultiSeries& o) const;

    std::vector<int> ord_;
    std::vector<size_t> stride_;
    size_t qsize_ = 1;
    int tdeg_ = 0;
    std::vector<K> c_;
};

// Single-variable convenience: sum_{k<=order} C(alpha,k) q^k.
template <class K>
MultiSeries<K> binomial_series(const Rational& alpha, int order) {
    return MultiSeries<K>::binomial({order}, 0, alpha);
}

extern template class MultiSeries<Rational>;
extern template class MultiSeries<Cyclo>;

} // namespace isoquot

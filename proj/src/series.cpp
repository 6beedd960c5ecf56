#include "isoquot/series.hpp"

#include <algorithm>

namespace isoquot {

template <class K>
MultiSeries<K>::MultiSeries(std::vector<int> orders, int tdeg) : ord_(std::move(orders)), tdeg_(tdeg) {
    for (int o : ord_)
        if (o < 0) throw InvalidArgument("negative truncation order");
    if (tdeg_ < 0) tdeg_ = 0;
    init_strides();
    c_.assign(qsize_ * static_cast<size_t>(tdeg_ + 1), K(0));
}

template <class K>
void MultiSeries<K>::init_strides() {
    stride_.assign(ord_.size(), 1);
    qsize_ = 1;
    for (size_t i = ord_.size(); i-- > 0;) {
        stride_[i] = qsize_;
        qsize_ *= static_cast<size_t>(ord_[i] + 1);
    }
}

template <class K>
void MultiSeries<K>::decode(size_t idx, std::vector<int>& e) const {
    for (size_t i = 0; i < ord_.size(); ++i) {
        e[i] = static_cast<int>(idx / stride_[i]);
        idx %= stride_[i];
    }
}

template <class K>
size_t MultiSeries<K>::index(const std::vector<int>& e) const {
    size_t idx = 0;
    for (size_t i = 0; i < ord_.size(); ++i) idx += static_cast<size_t>(e[i]) * stride_[i];
    return idx;
}

template <class K>
void MultiSeries<K>::check_same_vars(const MultiSeries& o) const {
    if (ord_ != o.ord_) throw InvalidArgument("series over different variable sets");
}

template <class K>
MultiSeries<K> MultiSeries<K>::constant(const std::vector<int>& orders, const K& c) {
    MultiSeries s(orders);
    s.c_[0] = c;
    return s;
}

template <class K>
MultiSeries<K> MultiSeries<K>::variable(const std::vector<int>& orders, int i) {
    MultiSeries s(orders);
    if (orders[static_cast<size_t>(i)] >= 1) s.c_[s.stride_[static_cast<size_t>(i)]] = K(1);
    return s;
}

template <class K>
MultiSeries<K> MultiSeries<K>::t_variable(const std::vector<int>& orders) {
    MultiSeries s(orders, 1);
    s.c_[1] = K(1);
    return s;
}

template <class K>
MultiSeries<K> MultiSeries<K>::binomial(const std::vector<int>& orders, int i, const Rational& alpha) {
    MultiSeries s(orders);
    Rational c(1);
    for (int k = 0; k <= orders[static_cast<size_t>(i)]; ++k) {
        s.c_[static_cast<size_t>(k) * s.stride_[static_cast<size_t>(i)]] = K(c);
        c *= (alpha - Rational(k)) / Rational(k + 1);
    }
    return s;
}

template <class K>
MultiSeries<K> MultiSeries<K>::linear_power(const std::vector<int>& orders, const K& c,
                                            const std::vector<K>& a, long e) {
    if (a.size() != orders.size()) throw InvalidArgument("linear form arity mismatch");
    if (e < 0 && isoquot::is_zero(c)) throw NonUnitConstantTerm("negative power of a form with zero constant");
    MultiSeries s(orders);
    std::vector<int> ex(orders.size(), 0);
    // Coefficient of q^ex is C(e, |ex|) * multinomial(|ex|; ex) * c^(e-|ex|) * prod a_i^ex_i.
    K cinv = isoquot::is_zero(c) ? K(0) : K(1) / c;
    for (size_t idx = 0; idx < s.qsize_; ++idx) {
        s.decode(idx, ex);
        long tot = 0;
        K mono(1);
        Rational multi(1);
        bool zero = false;
        for (size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            if (isoquot::is_zero(a[i])) { zero = true; break; }
            tot += ex[i];
            mono *= a[i].pow(ex[i]);
            multi *= isoquot::binomial(tot, ex[i]);
        }
        if (zero) continue;
        if (e >= 0 && tot > e) continue;
        Rational cb = gen_binomial(Rational(e), tot) * multi;
        K cp = (e - tot >= 0) ? c.pow(e - tot) : cinv.pow(tot - e);
        s.c_[idx] = K(cb) * cp * mono;
    }
    return s;
}

template <class K>
int MultiSeries<K>::t_degree() const {
    for (int te = tdeg_; te >= 0; --te)
        for (size_t idx = 0; idx < qsize_; ++idx)
            if (!isoquot::is_zero(at(idx, te))) return te;
    return -1;
}

template <class K>
bool MultiSeries<K>::all_zero() const {
    for (const auto& v : c_)
        if (!isoquot::is_zero(v)) return false;
    return true;
}

template <class K>
void MultiSeries<K>::shrink_t() {
    int td = std::max(t_degree(), 0);
    if (td == tdeg_) return;
    std::vector<K> v(qsize_ * static_cast<size_t>(td + 1), K(0));
    for (size_t idx = 0; idx < qsize_; ++idx)
        for (int te = 0; te <= td; ++te) v[idx * static_cast<size_t>(td + 1) + static_cast<size_t>(te)] = at(idx, te);
    c_ = std::move(v);
    tdeg_ = td;
}

template <class K>
K MultiSeries<K>::coefficient(const std::vector<int>& e, int te) const {
    if (e.size() != ord_.size()) throw InvalidArgument("exponent arity mismatch");
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) return K(0);
        if (e[i] > ord_[i]) throw TruncationTooShallow("exponent beyond truncation order");
    }
    if (te < 0 || te > tdeg_) return K(0);
    return at(index(e), te);
}

template <class K>
void MultiSeries<K>::add_to(const std::vector<int>& e, int te, const K& v) {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > ord_[i]) return;
    if (te > tdeg_) {
        MultiSeries grown(ord_, te);
        for (size_t idx = 0; idx < qsize_; ++idx)
            for (int k = 0; k <= tdeg_; ++k) grown.at(idx, k) = at(idx, k);
        *this = std::move(grown);
    }
    at(index(e), te) += v;
}

template <class K>
MultiSeries<K>& MultiSeries<K>::operator+=(const MultiSeries& o) {
    check_same_vars(o);
    if (o.tdeg_ > tdeg_) {
        MultiSeries r = o;
        for (size_t idx = 0; idx < qsize_; ++idx)
            for (int te = 0; te <= tdeg_; ++te) r.at(idx, te) += at(idx, te);
        *this = std::move(r);
    } else {
        for (size_t idx = 0; idx < qsize_; ++idx)
            for (int te = 0; te <= o.tdeg_; ++te) at(idx, te) += o.at(idx, te);
    }
    shrink_t();
    return *this;
}

template <class K>
MultiSeries<K>& MultiSeries<K>::operator-=(const MultiSeries& o) {
    return *this += o * K(-1);
}

template <class K>
MultiSeries<K>& MultiSeries<K>::operator*=(const K& s) {
    for (auto& v : c_) v *= s;
    shrink_t();
    return *this;
}

template <class K>
MultiSeries<K> MultiSeries<K>::mul(const MultiSeries& o) const {
    check_same_vars(o);
    MultiSeries r(ord_, tdeg_ + o.tdeg_);
    std::vector<std::vector<int>> exps(qsize_, std::vector<int>(ord_.size()));
    for (size_t idx = 0; idx < qsize_; ++idx) decode(idx, exps[idx]);
    std::vector<size_t> nz_a, nz_b;
    for (size_t idx = 0; idx < qsize_; ++idx) {
        bool za = true, zb = true;
        for (int te = 0; te <= tdeg_; ++te) za = za && isoquot::is_zero(at(idx, te));
        for (int te = 0; te <= o.tdeg_; ++te) zb = zb && isoquot::is_zero(o.at(idx, te));
        if (!za) nz_a.push_back(idx);
        if (!zb) nz_b.push_back(idx);
    }
    for (size_t ia : nz_a) {
        const auto& ea = exps[ia];
        for (size_t ib : nz_b) {
            const auto& eb = exps[ib];
            bool fits = true;
            for (size_t i = 0; i < ord_.size(); ++i)
                if (ea[i] + eb[i] > ord_[i]) { fits = false; break; }
            if (!fits) continue;
            size_t ir = ia + ib;
            for (int ta = 0; ta <= tdeg_; ++ta) {
                const K& va = at(ia, ta);
                if (isoquot::is_zero(va)) continue;
                for (int tb = 0; tb <= o.tdeg_; ++tb) {
                    const K& vb = o.at(ib, tb);
                    if (isoquot::is_zero(vb)) continue;
                    r.at(ir, ta + tb) += va * vb;
                }
            }
        }
    }
    r.shrink_t();
    return r;
}

template <class K>
MultiSeries<K> MultiSeries<K>::invert() const {
    if (!is_t_free()) throw NonUnitConstantTerm("cannot invert a series with t-dependence");
    K c0 = constant_term();
    if (isoquot::is_zero(c0)) throw NonUnitConstantTerm("constant term is zero");
    K c0inv = K(1) / c0;
    MultiSeries r(ord_);
    std::vector<std::vector<int>> exps(qsize_, std::vector<int>(ord_.size()));
    for (size_t idx = 0; idx < qsize_; ++idx) decode(idx, exps[idx]);
    std::vector<size_t> nz;
    for (size_t idx = 1; idx < qsize_; ++idx)
        if (!isoquot::is_zero(at(idx, 0))) nz.push_back(idx);
    r.at(0, 0) = c0inv;
    // Flat order refines the componentwise order, so each r_e only needs earlier entries.
    for (size_t idx = 1; idx < qsize_; ++idx) {
        const auto& e = exps[idx];
        K acc(0);
        for (size_t j : nz) {
            if (j > idx) break;
            const auto& ej = exps[j];
            bool le = true;
            for (size_t i = 0; i < e.size(); ++i)
                if (ej[i] > e[i]) { le = false; break; }
            if (!le) continue;
            const K& rv = r.at(idx - j, 0);
            if (isoquot::is_zero(rv)) continue;
            acc += at(j, 0) * rv;
        }
        if (!isoquot::is_zero(acc)) r.at(idx, 0) = -(acc * c0inv);
    }
    return r;
}

template <class K>
MultiSeries<K> MultiSeries<K>::pow(long e) const {
    if (e < 0) return invert().pow(-e);
    MultiSeries r = constant(ord_, K(1)), b = *this;
    while (e) {
        if (e & 1) r = r.mul(b);
        e >>= 1;
        if (e) b = b.mul(b);
    }
    return r;
}

template <class K>
MultiSeries<K> MultiSeries<K>::derive(int i) const {
    MultiSeries r(ord_, tdeg_);
    std::vector<int> e(ord_.size());
    const size_t s = stride_[static_cast<size_t>(i)];
    for (size_t idx = 0; idx < qsize_; ++idx) {
        decode(idx, e);
        int k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        for (int te = 0; te <= tdeg_; ++te) r.at(idx - s, te) = at(idx, te) * K(k);
    }
    r.shrink_t();
    return r;
}

template <class K>
MultiSeries<K> MultiSeries<K>::euler(int i) const {
    MultiSeries r(ord_, tdeg_);
    std::vector<int> e(ord_.size());
    for (size_t idx = 0; idx < qsize_; ++idx) {
        decode(idx, e);
        int k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        for (int te = 0; te <= tdeg_; ++te) r.at(idx, te) = at(idx, te) * K(k);
    }
    r.shrink_t();
    return r;
}

template <class K>
MultiSeries<K> MultiSeries<K>::derive_t() const {
    MultiSeries r(ord_, std::max(tdeg_ - 1, 0));
    for (size_t idx = 0; idx < qsize_; ++idx)
        for (int te = 1; te <= tdeg_; ++te) r.at(idx, te - 1) = at(idx, te) * K(te);
    r.shrink_t();
    return r;
}

template <class K>
MultiSeries<K> MultiSeries<K>::eval_t(const K& t) const {
    MultiSeries r(ord_);
    for (size_t idx = 0; idx < qsize_; ++idx) {
        K acc(0);
        for (int te = tdeg_; te >= 0; --te) acc = acc * t + at(idx, te);
        r.at(idx, 0) = acc;
    }
    return r;
}

template <class K>
MultiSeries<K> MultiSeries<K>::diagonal(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= nvars() || j >= nvars())
        throw InvalidArgument("diagonal needs two distinct variables");
    std::vector<int> nord;
    for (int k = 0; k < nvars(); ++k) {
        if (k == j) continue;
        nord.push_back(k == i ? std::min(ord_[static_cast<size_t>(i)], ord_[static_cast<size_t>(j)]) : ord_[static_cast<size_t>(k)]);
    }
    MultiSeries r(nord, tdeg_);
    std::vector<int> e(ord_.size()), ne;
    for (size_t idx = 0; idx < qsize_; ++idx) {
        decode(idx, e);
        ne.clear();
        for (int k = 0; k < nvars(); ++k) {
            if (k == j) continue;
            ne.push_back(k == i ? e[static_cast<size_t>(i)] + e[static_cast<size_t>(j)] : e[static_cast<size_t>(k)]);
        }
        bool fits = true;
        for (size_t k = 0; k < ne.size(); ++k)
            if (ne[k] > nord[k]) { fits = false; break; }
        if (!fits) continue;
        size_t nidx = r.index(ne);
        for (int te = 0; te <= tdeg_; ++te) r.at(nidx, te) += at(idx, te);
    }
    r.shrink_t();
    return r;
}

template class MultiSeries<Rational>;
template class MultiSeries<Cyclo>;

} // namespace isoquot

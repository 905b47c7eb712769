#include "berezin/grassmann.hpp"

#include <bit>
#include <sstream>

#include "berezin/errors.hpp"

namespace berezin {

namespace {

// Parity of the number of pairs (i in a, j in b) with i > j: the sign of
// sorting the concatenation a ++ b when both halves are already sorted.
int merge_sign(std::uint64_t a, std::uint64_t b) {
    int crossings = 0;
    while (b) {
        int j = std::countr_zero(b);
        b &= b - 1;
        crossings += std::popcount(a >> (j + 1));
    }
    return (crossings % 2 == 0) ? 1 : -1;
}

} // namespace

GrassmannElement::GrassmannElement(int algebra_size) : size_(algebra_size) {
    if (algebra_size < 0 || algebra_size > 64)
        throw algebra_error("algebra size must be in 0..64");
}

GrassmannElement GrassmannElement::scalar(int algebra_size, MultiPoly c) {
    GrassmannElement e(algebra_size);
    if (!c.is_zero()) e.terms_.emplace(0, std::move(c));
    return e;
}

GrassmannElement GrassmannElement::generator(int algebra_size, int i) {
    GrassmannElement e(algebra_size);
    if (i < 1 || i > algebra_size)
        throw algebra_error("generator index out of range");
    e.terms_.emplace(std::uint64_t{1} << (i - 1), MultiPoly(1));
    return e;
}

bool GrassmannElement::is_even() const {
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) % 2 != 0) return false;
    return true;
}

MultiPoly GrassmannElement::coefficient(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? MultiPoly() : it->second;
}

void GrassmannElement::insert(std::uint64_t mask, MultiPoly c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GrassmannElement::add_term(std::uint64_t mask, MultiPoly c) {
    if (size_ < 64 && (mask >> size_) != 0)
        throw algebra_error("monomial mask outside the algebra");
    insert(mask, std::move(c));
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& rhs) {
    if (size_ != rhs.size_) throw algebra_error("mixing algebras of different size");
    if (this == &rhs) {
        for (auto& [mask, c] : terms_) c *= Rational(2);
        return *this;
    }
    for (const auto& [mask, c] : rhs.terms_) {
        auto [it, fresh] = terms_.emplace(mask, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& rhs) {
    return *this += -rhs;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement r(*this);
    for (auto& [mask, c] : r.terms_) c = -c;
    return r;
}

GrassmannElement& GrassmannElement::operator*=(const GrassmannElement& rhs) {
    if (size_ != rhs.size_) throw algebra_error("mixing algebras of different size");
    GrassmannElement prod(size_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            if (ma & mb) continue; // repeated generator annihilates
            MultiPoly c = ca * cb;
            if (merge_sign(ma, mb) < 0) c = -c;
            prod.insert(ma | mb, std::move(c));
        }
    }
    *this = std::move(prod);
    return *this;
}

GrassmannElement& GrassmannElement::operator*=(const MultiPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

GrassmannElement& GrassmannElement::operator*=(const Rational& c) {
    return *this *= MultiPoly(c);
}

std::string GrassmannElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        std::uint64_t rest = mask;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            os << "*g" << (i + 1);
        }
    }
    return os.str();
}

GrassmannElement gexp(const GrassmannElement& f) {
    if (!f.constant_term().is_zero())
        throw algebra_error("gexp: nonzero constant term");
    GrassmannElement acc = GrassmannElement::unit(f.algebra_size());
    GrassmannElement term = acc;
    for (int p = 1; p <= f.algebra_size() + 1; ++p) {
        term *= f;
        if (term.is_zero()) return acc;
        term *= Rational(1, p);
        acc += term;
    }
    return acc; // unreachable for nilpotent input; the bound is a safety net
}

GeneratorOrder GeneratorOrder::descending(int m) {
    GeneratorOrder o;
    for (int i = m; i >= 1; --i) o.measure.push_back(i);
    return o;
}

GrassmannElement integrate_partial(const GrassmannElement& f,
                                   const std::vector<int>& measure) {
    GrassmannElement cur = f;
    // rightmost measure factor acts first
    for (auto it = measure.rbegin(); it != measure.rend(); ++it) {
        int g = *it;
        if (g < 1 || g > cur.algebra_size())
            throw algebra_error("integration over a generator outside the algebra");
        std::uint64_t bit = std::uint64_t{1} << (g - 1);
        std::uint64_t below = bit - 1;
        GrassmannElement next(cur.algebra_size());
        for (const auto& [mask, c] : cur.terms()) {
            if (!(mask & bit)) continue; // the integral kills terms without chi_g
            // moving chi_g to the front passes every smaller generator present
            MultiPoly nc = c;
            if (std::popcount(mask & below) % 2 != 0) nc = -nc;
            next.add_term(mask & ~bit, std::move(nc));
        }
        cur = std::move(next);
    }
    return cur;
}

MultiPoly integrate(const GrassmannElement& f, const GeneratorOrder& order) {
    if (static_cast<int>(order.measure.size()) != f.algebra_size())
        throw algebra_error("full integral needs a measure over every generator");
    std::vector<char> seen(static_cast<size_t>(f.algebra_size()) + 1, 0);
    for (int g : order.measure) {
        if (g < 1 || g > f.algebra_size() || seen[g])
            throw algebra_error("integration order is not a permutation");
        seen[g] = 1;
    }
    GrassmannElement res = integrate_partial(f, order.measure);
    return res.constant_term();
}

namespace {

// chi_i and chibar_i in the 2N-generator algebra, interleaved layout.
inline int chi_index(int i) { return 2 * i - 1; }
inline int chibar_index(int i) { return 2 * i; }

// exp(-chibar M chi) over the interleaved 2N algebra.
GrassmannElement gaussian_action(const PolyMatrix& m) {
    const int n = m.rows();
    GrassmannElement quad(2 * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const MultiPoly& w = m.at(i - 1, j - 1);
            if (w.is_zero()) continue;
            GrassmannElement t = GrassmannElement::generator(2 * n, chibar_index(i)) *
                                 GrassmannElement::generator(2 * n, chi_index(j));
            t *= -w;
            quad += t;
        }
    return gexp(quad);
}

// d chibar_N d chi_N ... d chibar_1 d chi_1 on the interleaved layout is
// just the descending generator order 2N, 2N-1, ..., 1.
GeneratorOrder pair_measure(int n) { return GeneratorOrder::descending(2 * n); }

} // namespace

MultiPoly berezin_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("berezin_det: non-square matrix");
    return integrate(gaussian_action(m), pair_measure(m.rows()));
}

MultiPoly berezin_minor(const PolyMatrix& m, const std::vector<int>& I,
                        const std::vector<int>& J) {
    if (m.rows() != m.cols()) throw shape_error("berezin_minor: non-square matrix");
    const int n = m.rows();
    if (I.size() != J.size()) throw argument_error("berezin_minor: |I| != |J|");
    auto check = [n](const std::vector<int>& v, const char* name) {
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k] < 1 || v[k] > n)
                throw argument_error(std::string("berezin_minor: ") + name +
                                     " index out of range");
            if (k > 0 && v[k] <= v[k - 1])
                throw argument_error(std::string("berezin_minor: ") + name +
                                     " must be strictly increasing");
        }
    };
    check(I, "row");
    check(J, "column");

    // chi_J chibar_I = chi_{j1} chibar_{i1} ... chi_{jp} chibar_{ip}
    GrassmannElement pre = GrassmannElement::unit(2 * n);
    for (size_t k = 0; k < I.size(); ++k) {
        pre *= GrassmannElement::generator(2 * n, chi_index(J[k]));
        pre *= GrassmannElement::generator(2 * n, chibar_index(I[k]));
    }
    MultiPoly val = integrate(pre * gaussian_action(m), pair_measure(n));
    long s = 0;
    for (int i : I) s += i;
    for (int j : J) s += j;
    if (s % 2 != 0) val = -val;
    return val;
}

GaussianCheckReport gaussian_identity_check(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw shape_error("gaussian_identity_check: non-square matrix");
    const int n = m.rows();
    MultiPoly d = det_poly(m);
    if (d.is_zero()) throw singular_error("gaussian_identity_check: singular matrix");
    PolyMatrix adj = adjugate(m);

    // Algebra of 4N generators: eta_k = 2k-1, etabar_k = 2k for k <= N,
    // then psi_k = 2N + 2k-1, psibar_k = 2N + 2k.
    const int total = 4 * n;
    auto eta = [&](int k) { return GrassmannElement::generator(total, 2 * k - 1); };
    auto etabar = [&](int k) { return GrassmannElement::generator(total, 2 * k); };
    auto psi = [&](int k) { return GrassmannElement::generator(total, 2 * n + 2 * k - 1); };
    auto psibar = [&](int k) { return GrassmannElement::generator(total, 2 * n + 2 * k); };

    // X = etabar adj(M) eta; adj(M)/det(M) is the exact inverse, so scaling
    // both sides of the identity by det(M)^N keeps everything polynomial:
    //   det(M)^N exp(etabar M^{-1} eta) = sum_p det(M)^{N-p} X^p / p!
    GrassmannElement x(total);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            const MultiPoly& w = adj.at(k - 1, l - 1);
            if (w.is_zero()) continue;
            GrassmannElement t = etabar(k) * eta(l);
            t *= w;
            x += t;
        }
    GrassmannElement series(total);
    {
        GrassmannElement xp = GrassmannElement::unit(total); // X^p / p!
        for (int p = 0; p <= n; ++p) {
            if (p > 0) {
                xp *= x;
                xp *= Rational(1, p);
                if (xp.is_zero()) break;
            }
            GrassmannElement scaled = xp;
            scaled *= poly_pow(d, static_cast<unsigned>(n - p));
            series += scaled;
        }
    }

    // source coupling exp(psibar eta + etabar psi)
    GrassmannElement src(total);
    for (int k = 1; k <= n; ++k) {
        src += psibar(k) * eta(k);
        src += etabar(k) * psi(k);
    }
    GrassmannElement integrand = series * gexp(src);

    // d eta d etabar = d eta_N d etabar_N ... d eta_1 d etabar_1
    std::vector<int> measure;
    for (int k = n; k >= 1; --k) {
        measure.push_back(2 * k - 1);
        measure.push_back(2 * k);
    }
    GrassmannElement lhs = integrate_partial(integrand, measure);

    // det(M)^N * det(M^{-1}) exp(-psibar M psi) = det(M)^{N-1} exp(-psibar M psi)
    GrassmannElement quad(total);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            const MultiPoly& w = m.at(k - 1, l - 1);
            if (w.is_zero()) continue;
            GrassmannElement t = psibar(k) * psi(l);
            t *= -w;
            quad += t;
        }
    GrassmannElement rhs = gexp(quad);
    rhs *= poly_pow(d, static_cast<unsigned>(n - 1));

    GaussianCheckReport rep;
    rep.equal = (lhs == rhs);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    if (!rep.equal) {
        GrassmannElement diff = lhs - rhs;
        if (!diff.is_zero()) {
            const auto& [mask, c] = *diff.terms().begin();
            std::ostringstream os;
            os << "monomial mask " << mask << ": difference " << c.str();
            rep.mismatch = os.str();
        }
    }
    return rep;
}

} // namespace berezin

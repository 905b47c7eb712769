#include "berezin/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>

namespace berezin {

Rational parse_rational(const std::string& text) {
    static const std::regex form(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
    if (!std::regex_match(text, form))
        throw argument_error("not a rational literal: '" + text + "'");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class den(text.substr(slash + 1));
        if (den == 0)
            throw argument_error("zero denominator in rational literal: '" + text + "'");
    }
    Rational q(text);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
    return Rational(num, den); // inputs canonical, so the power is too
}

namespace {

// Splits a name into alternating non-digit / digit runs and compares run by
// run, digits numerically. "x2" < "x10", "w_1_2_1" < "w_1_10_1".
int natural_cmp(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            size_t i0 = i, j0 = j;
            while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
            while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) ++j;
            std::string ra = a.substr(i0, i - i0), rb = b.substr(j0, j - j0);
            ra.erase(0, std::min(ra.find_first_not_of('0'), ra.size() - 1));
            rb.erase(0, std::min(rb.find_first_not_of('0'), rb.size() - 1));
            if (ra.size() != rb.size()) return ra.size() < rb.size() ? -1 : 1;
            if (ra != rb) return ra < rb ? -1 : 1;
        } else {
            if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
            ++i;
            ++j;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

int variable_class(const std::string& name) {
    if (name == "a" || name == "b") return 0;
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](unsigned char c) { return std::isdigit(c); }))
        return 1;
    if (name.size() >= 2 && name[0] == 'w' && name[1] == '_') return 2;
    return 3;
}

} // namespace

bool variable_less(const std::string& a, const std::string& b) {
    int ca = variable_class(a), cb = variable_class(b);
    if (ca != cb) return ca < cb;
    return natural_cmp(a, b) < 0;
}

bool GrlexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() > b.size(); // only hit when universes differ, never inside one map
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(std::vector<int>{}, c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (name.empty()) throw argument_error("empty variable name");
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(std::vector<int>{1}, Rational(1));
    return p;
}

MultiPoly MultiPoly::term(const Rational& c, const std::vector<std::string>& vars,
                          const std::vector<int>& exps) {
    if (vars.size() != exps.size())
        throw argument_error("term: variable/exponent length mismatch");
    MultiPoly p(c);
    for (size_t i = 0; i < vars.size(); ++i) {
        if (exps[i] < 0) throw argument_error("term: negative exponent");
        MultiPoly v = MultiPoly::variable(vars[i]);
        for (int e = 0; e < exps[i]; ++e) p *= v;
    }
    return p;
}

Rational MultiPoly::constant_value() const {
    std::vector<int> zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // leading term of a graded order has the maximal total degree
    const auto& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

int MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key[idx]);
    return d;
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<char> used(vars_.size(), 0);
    for (const auto& [key, c] : terms_)
        for (size_t i = 0; i < key.size(); ++i)
            if (key[i] > 0) used[i] = 1;
    if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) return;

    std::vector<std::string> kept;
    std::vector<size_t> keep_idx;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            kept.push_back(vars_[i]);
            keep_idx.push_back(i);
        }
    TermMap slim;
    for (const auto& [key, c] : terms_) {
        std::vector<int> nk(keep_idx.size());
        for (size_t i = 0; i < keep_idx.size(); ++i) nk[i] = key[keep_idx[i]];
        slim.emplace(std::move(nk), c);
    }
    vars_ = std::move(kept);
    terms_ = std::move(slim);
}

void align(const MultiPoly& a, const MultiPoly& b, std::vector<std::string>& vars,
           MultiPoly::TermMap& ta, MultiPoly::TermMap& tb) {
    if (a.vars_ == b.vars_) {
        vars = a.vars_;
        ta = a.terms_;
        tb = b.terms_;
        return;
    }
    vars.clear();
    std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
               std::back_inserter(vars), variable_less);
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    auto remap = [&vars](const MultiPoly& src, MultiPoly::TermMap& dst) {
        std::vector<size_t> pos(src.vars_.size());
        for (size_t i = 0; i < src.vars_.size(); ++i)
            pos[i] = static_cast<size_t>(
                std::lower_bound(vars.begin(), vars.end(), src.vars_[i], variable_less) -
                vars.begin());
        dst.clear();
        for (const auto& [key, c] : src.terms_) {
            std::vector<int> nk(vars.size(), 0);
            for (size_t i = 0; i < key.size(); ++i) nk[pos[i]] = key[i];
            dst.emplace(std::move(nk), c);
        }
    };
    remap(a, ta);
    remap(b, tb);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    std::vector<std::string> vars;
    TermMap ta, tb;
    align(*this, rhs, vars, ta, tb);
    for (const auto& [key, c] : tb) {
        auto [it, fresh] = ta.emplace(key, c);
        if (!fresh) it->second += c;
    }
    vars_ = std::move(vars);
    terms_ = std::move(ta);
    normalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    std::vector<std::string> vars;
    TermMap ta, tb;
    align(*this, rhs, vars, ta, tb);
    TermMap prod;
    std::vector<int> key(vars.size());
    for (const auto& [ka, ca] : ta) {
        for (const auto& [kb, cb] : tb) {
            for (size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
            auto [it, fresh] = prod.emplace(key, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    vars_ = std::move(vars);
    terms_ = std::move(prod);
    normalize();
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly poly_pow(const MultiPoly& p, unsigned e) {
    MultiPoly acc(Rational(1));
    MultiPoly base(p);
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

MultiPoly divexact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw singular_error("divexact: division by zero polynomial");
    if (p.is_zero()) return MultiPoly();
    std::vector<std::string> vars;
    MultiPoly::TermMap rp, rq;
    align(p, q, vars, rp, rq);

    const auto& qlead = *rq.begin();
    MultiPoly quot;
    quot.vars_ = vars;
    while (!rp.empty()) {
        const auto& plead = *rp.begin();
        std::vector<int> mono(vars.size());
        for (size_t i = 0; i < vars.size(); ++i) {
            mono[i] = plead.first[i] - qlead.first[i];
            if (mono[i] < 0)
                throw evaluation_error("divexact: quotient is not a polynomial");
        }
        Rational c = plead.second / qlead.second;
        // subtract c * x^mono * q from the remainder
        std::vector<int> key(vars.size());
        for (const auto& [kq, cq] : rq) {
            for (size_t i = 0; i < key.size(); ++i) key[i] = kq[i] + mono[i];
            auto [it, fresh] = rp.emplace(key, -c * cq);
            if (!fresh) {
                it->second -= c * cq;
                if (it->second == 0) rp.erase(it);
            }
        }
        quot.terms_.emplace(std::move(mono), c);
    }
    quot.normalize();
    return quot;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<const Rational*> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end())
            throw evaluation_error("eval: no value for variable '" + vars_[i] + "'");
        vals[i] = &it->second;
    }
    Rational acc(0);
    for (const auto& [key, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < key.size(); ++i)
            if (key[i] > 0) t *= rational_pow(*vals[i], static_cast<unsigned long>(key[i]));
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string monos;
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars_[i];
            if (key[i] > 1) monos += "^" + std::to_string(key[i]);
        }
        if (monos.empty()) {
            os << rational_str(mag);
        } else {
            if (mag != 1) os << rational_str(mag) << "*";
            os << monos;
        }
    }
    return os.str();
}

} // namespace berezin

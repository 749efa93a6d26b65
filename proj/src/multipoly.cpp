#include "qjt/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qjt {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, mpq_class c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars,
                              const std::string& name, int power) {
    MultiPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end())
        throw std::invalid_argument("unknown variable: " + name);
    Exponents e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(it - p.vars_.begin())] = power;
    p.terms_[e] = 1;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MultiPoly::degree_in(std::size_t var_index) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (e.size() != vars_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& g) const {
    check_vars(g);
    if (g.is_zero()) return std::nullopt;
    // Term-by-term division steered by the lex-largest terms; terminates
    // because the dividend shrinks in that order at every step.
    MultiPoly rem = *this;
    MultiPoly quo(vars_);
    const auto& glead = *g.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents q(vars_.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rlead.first[i] - glead.first[i];
            if (q[i] < 0) return std::nullopt;
        }
        mpq_class c = rlead.second / glead.second;
        MultiPoly t(vars_);
        t.terms_[q] = c;
        quo = quo + t;
        rem = rem - t * g;
    }
    return quo;
}

Scalar MultiPoly::eval(const std::map<std::string, Scalar>& point) const {
    std::vector<Scalar> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end())
            throw std::invalid_argument("missing variable assignment: " + v);
        vals.push_back(it->second);
        if (vals.front().field() != vals.back().field())
            throw FieldMismatchError("mixed fields in evaluation point");
    }
    FieldSpec f = vals.empty() ? FieldSpec::rational() : vals[0].field();
    Scalar acc = Scalar::zero(f);
    for (const auto& [e, c] : terms_) {
        Scalar term = Scalar::rational(c).to_field(f);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (e[i] != 0)
                term = term * vals[i].pow(static_cast<unsigned long>(e[i]));
        acc = acc + term;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print from the lex-largest term down.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpq_class a = abs(c);
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x; });
        if (a != 1 || !any_var) os << a.get_str();
        bool star = (a != 1);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qjt

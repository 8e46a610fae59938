#include "hjj/poly.hpp"

#include "hjj/errors.hpp"
#include "hjj/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hjj {

namespace {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m)
        d += e;
    return d;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b)
        r[v] += e;
    return r;
}

std::string monomial_text(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty())
            s += "*";
        s += v;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

Poly::Poly(const Scalar& c) {
    add_term({}, c);
}

Poly Poly::var(const std::string& name) {
    Poly p;
    p.add_term({{name, 1}}, 1);
    return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Poly::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, total_degree(m));
    return d;
}

unsigned Poly::degree_in(const std::string& v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it != m.end())
            d = std::max(d, it->second);
    }
    return d;
}

std::set<std::string> Poly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            out.insert(v);
    return out;
}

Poly Poly::coefficient(const std::string& v, unsigned k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        unsigned e = it == m.end() ? 0 : it->second;
        if (e != k)
            continue;
        Monomial rest = m;
        rest.erase(v);
        r.add_term(rest, c);
    }
    return r;
}

Poly Poly::substitute(const std::string& v, const Poly& value) const {
    return substitute(std::map<std::string, Poly>{{v, value}});
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        Monomial rest;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end())
                rest[v] = e;
            else
                term *= pow(it->second, e);
        }
        Poly mono;
        mono.add_term(rest, 1);
        r += term * mono;
    }
    return r;
}

Poly Poly::partial(const Assignment& values) const {
    std::map<std::string, Poly> subs;
    for (const auto& [v, x] : values)
        subs.emplace(v, Poly(x));
    return substitute(subs);
}

Scalar Poly::evaluate(const Assignment& values) const {
    Scalar total = 0;
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end())
                throw MissingParameter("no value for parameter '" + v + "'");
            for (unsigned i = 0; i < e; ++i)
                t *= it->second;
        }
        total += t;
    }
    return total;
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return total_degree(a.first) > total_degree(b.first);
    });
    std::string out;
    for (const auto& [m, c] : sorted) {
        Scalar mag = abs(c);
        bool negative = c < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        if (m.empty()) {
            out += hjj::to_string(mag);
            continue;
        }
        if (mag != 1)
            out += hjj::to_string(mag) + "*";
        out += monomial_text(m);
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(multiply(ma, mb), ca * cb);
    *this = std::move(r);
    return *this;
}

Poly pow(const Poly& p, unsigned k) {
    Poly r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= p;
    return r;
}

namespace {

struct State {
    std::map<std::string, Poly> assignment;
    std::vector<Poly> equations;
};

void assign(State& s, const std::string& v, const Poly& value) {
    for (auto& [w, p] : s.assignment)
        p = p.substitute(v, value);
    s.assignment[v] = value;
    for (auto& e : s.equations)
        e = e.substitute(v, value);
}

bool is_homogeneous_quadratic(const Poly& p) {
    for (const auto& [m, c] : p.terms())
        if (total_degree(m) != 2)
            return false;
    return true;
}

/// Sylvester's criterion on the symmetric matrix of a quadratic form.
bool is_definite(const Poly& q) {
    auto vars = q.variables();
    std::vector<std::string> names(vars.begin(), vars.end());
    std::size_t n = names.size();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = q.coefficient(names[i], 2).constant();
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar c = q.coefficient(names[i], 1).coefficient(names[j], 1).constant();
            g(i, j) = c / 2;
            g(j, i) = c / 2;
        }
    }
    bool positive = true;
    bool negative = true;
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor(i, j) = g(i, j);
        Scalar d = determinant(minor);
        if (d <= 0)
            positive = false;
        if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0))
            negative = false;
    }
    return positive || negative;
}

void run(State s, std::vector<SolutionBranch>& out, const std::vector<std::string>& variables) {
    for (;;) {
        std::vector<Poly> eqs;
        for (auto& e : s.equations) {
            if (e.is_zero())
                continue;
            if (e.is_constant())
                return;
            eqs.push_back(std::move(e));
        }
        s.equations = std::move(eqs);
        if (s.equations.empty()) {
            SolutionBranch b;
            b.assignment = s.assignment;
            for (const auto& v : variables)
                if (!b.assignment.count(v))
                    b.free.push_back(v);
            out.push_back(std::move(b));
            return;
        }

        bool progressed = false;
        for (const auto& e : s.equations) {
            for (const auto& v : e.variables()) {
                if (e.degree_in(v) != 1)
                    continue;
                Poly coeff = e.coefficient(v, 1);
                if (!coeff.is_constant())
                    continue;
                Poly rest = e.coefficient(v, 0);
                assign(s, v, Poly(Scalar(-1) / coeff.constant()) * rest);
                progressed = true;
                break;
            }
            if (progressed)
                break;
        }
        if (progressed)
            continue;

        for (const auto& e : s.equations) {
            if (e.terms().size() != 1)
                continue;
            const Monomial& m = e.terms().begin()->first;
            if (m.size() == 1) {
                assign(s, m.begin()->first, Poly(0));
                progressed = true;
                break;
            }
            for (const auto& [v, exp] : m) {
                State branch = s;
                assign(branch, v, Poly(0));
                run(std::move(branch), out, variables);
            }
            return;
        }
        if (progressed)
            continue;

        for (const auto& e : s.equations) {
            if (!is_homogeneous_quadratic(e) || !is_definite(e))
                continue;
            for (const auto& v : e.variables())
                assign(s, v, Poly(0));
            progressed = true;
            break;
        }
        if (progressed)
            continue;

        throw UnsupportedSystem("cannot eliminate from equation " + s.equations.front().to_string() +
                                " = 0");
    }
}

}  // namespace

std::vector<SolutionBranch> solve_by_elimination(const std::vector<Poly>& equations,
                                                 const std::vector<std::string>& variables) {
    std::vector<SolutionBranch> out;
    run(State{{}, equations}, out, variables);
    return out;
}

}  // namespace hjj

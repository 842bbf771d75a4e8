#include "zetaforge/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zetaforge {

namespace {

unsigned term_degree(const MultiPoly::Term& t) {
    return std::accumulate(t.exps.begin(), t.exps.end(), 0u);
}

// graded-lex descending: higher total degree first, then lexicographically
// larger exponent vector (x0 weighs heaviest) first
bool term_before(const MultiPoly::Term& a, const MultiPoly::Term& b) {
    unsigned da = term_degree(a), db = term_degree(b);
    if (da != db) return da > db;
    return a.exps > b.exps;
}

} // namespace

MultiPoly::MultiPoly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
    for (const auto& t : terms)
        if (t.exps.size() != nvars)
            throw std::invalid_argument("MultiPoly: exponent vector arity mismatch");
    normalize(std::move(terms));
}

void MultiPoly::normalize(std::vector<Term> raw) {
    std::map<std::vector<unsigned>, Int> acc;
    for (auto& t : raw) acc[t.exps] += t.coeff;
    terms_.clear();
    for (auto& [exps, coeff] : acc)
        if (coeff != 0) terms_.push_back(Term{coeff, exps});
    std::sort(terms_.begin(), terms_.end(), term_before);
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Int& c) {
    MultiPoly f(nvars);
    if (c != 0) f.terms_.push_back(Term{c, std::vector<unsigned>(nvars, 0)});
    return f;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly f(nvars);
    Term t{Int(1), std::vector<unsigned>(nvars, 0)};
    t.exps[index] = 1;
    f.terms_.push_back(std::move(t));
    return f;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && term_degree(terms_[0]) == 0);
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(term_degree(terms_.front()));
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = term_degree(terms_.front());
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return term_degree(t) == d; });
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    std::vector<Term> raw = terms_;
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    MultiPoly f(nvars_);
    f.normalize(std::move(raw));
    return f;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly f(nvars_);
    f.terms_ = terms_;
    for (auto& t : f.terms_) t.coeff = -t.coeff;
    return f;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Term t{a.coeff * b.coeff, a.exps};
            for (std::size_t i = 0; i < nvars_; ++i) t.exps[i] += b.exps[i];
            raw.push_back(std::move(t));
        }
    MultiPoly f(nvars_);
    f.normalize(std::move(raw));
    return f;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars_) throw std::invalid_argument("MultiPoly: variable index out of range");
    std::vector<Term> raw;
    for (const auto& t : terms_) {
        if (t.exps[var] == 0) continue;
        Term d{t.coeff * static_cast<long>(t.exps[var]), t.exps};
        d.exps[var] -= 1;
        raw.push_back(std::move(d));
    }
    MultiPoly f(nvars_);
    f.normalize(std::move(raw));
    return f;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Int a = abs(t.coeff);
        if (first) {
            if (t.coeff < 0) out << "-";
            first = false;
        } else {
            out << (t.coeff < 0 ? " - " : " + ");
        }
        bool has_vars = term_degree(t) > 0;
        bool coeff_shown = !has_vars || a != 1;
        if (coeff_shown) out << a.get_str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 0) continue;
            if (need_star) out << "*";
            out << "x" << i;
            if (t.exps[i] > 1) out << "^" << t.exps[i];
            need_star = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, std::size_t nvars) : s_(text), nvars_(nvars) {}

    MultiPoly run() {
        MultiPoly f = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("polynomial syntax error at '" + s_.substr(pos_) + "'");
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MultiPoly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        if (eat('^')) {
            Int e = parse_integer();
            if (e < 0 || e > 4096)
                throw std::invalid_argument("polynomial exponent out of range");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    MultiPoly parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("polynomial syntax error: unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly f = parse_expr();
            if (!eat(')')) throw std::invalid_argument("polynomial syntax error: missing ')'");
            return f;
        }
        if (c == 'x') {
            ++pos_;
            Int idx = parse_integer();
            if (idx < 0 || idx >= static_cast<long>(nvars_))
                throw std::invalid_argument("variable x" + idx.get_str() + " out of range");
            return MultiPoly::variable(nvars_, idx.get_ui());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(nvars_, parse_integer());
        if (c == '-') {
            ++pos_;
            return -parse_base();
        }
        throw std::invalid_argument(std::string("polynomial syntax error at '") + c + "'");
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw std::invalid_argument("polynomial syntax error: expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text, std::size_t nvars) {
    return PolyParser(text, nvars).run();
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

template <class Elem, class FromInt>
Elem eval_generic(const MultiPoly& f, const std::vector<Elem>& point, FromInt from_int) {
    if (point.size() != f.nvars())
        throw std::invalid_argument("eval_poly: point arity does not match polynomial");
    Elem acc = from_int(Int(0));
    for (const auto& t : f.terms()) {
        Elem v = from_int(t.coeff);
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < t.exps[i]; ++e) v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

} // namespace

FqElem eval_poly(const MultiPoly& f, const std::vector<FqElem>& point) {
    if (point.empty()) throw std::invalid_argument("eval_poly: empty point");
    const FieldPtr& field = point.front().field();
    for (const auto& x : point)
        if (!(*x.field() == *field))
            throw std::invalid_argument("eval_poly: mixed fields in point");
    return eval_generic(f, point, [&](const Int& n) { return FqElem::from_int(field, n); });
}

ZmodElem eval_poly(const MultiPoly& f, const std::vector<ZmodElem>& point) {
    if (point.empty()) throw std::invalid_argument("eval_poly: empty point");
    long p = point.front().p(), k = point.front().k();
    for (const auto& x : point)
        if (x.p() != p || x.k() != k)
            throw std::invalid_argument("eval_poly: mixed rings in point");
    return eval_generic(f, point, [&](const Int& n) { return ZmodElem(p, k, n); });
}

} // namespace zetaforge

#include "zetaforge/k0.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace zetaforge {

// ---------------------------------------------------------------------------
// UVPoly

UVPoly UVPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

UVPoly UVPoly::monomial(const Rat& c, long du, long dv) {
    UVPoly f;
    if (c != 0) f.terms_[{du, dv}] = c;
    return f;
}

void UVPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

UVPoly UVPoly::operator+(const UVPoly& o) const {
    UVPoly f = *this;
    for (const auto& [k, c] : o.terms_) f.terms_[k] += c;
    f.prune();
    return f;
}

UVPoly UVPoly::operator-(const UVPoly& o) const {
    UVPoly f = *this;
    for (const auto& [k, c] : o.terms_) f.terms_[k] -= c;
    f.prune();
    return f;
}

UVPoly UVPoly::operator*(const UVPoly& o) const {
    UVPoly f;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            f.terms_[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    f.prune();
    return f;
}

UVPoly UVPoly::scaled(const Rat& c) const {
    UVPoly f;
    if (c == 0) return f;
    for (const auto& [k, v] : terms_) f.terms_[k] = v * c;
    return f;
}

std::string UVPoly::to_string() const {
    if (terms_.empty()) return "0";
    // display in descending total degree, then descending (du, dv)
    std::vector<std::pair<std::pair<long, long>, Rat>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        long da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : items) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        auto var = [&](const char* name, long e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        var("u", key.first);
        var("v", key.second);
        if (mono.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << mono;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// K0Elem

K0Elem K0Elem::from_rat(const Rat& c) {
    K0Elem e;
    if (c != 0) e.terms_[Key{}] = c;
    return e;
}

K0Elem K0Elem::lefschetz(long exp) {
    K0Elem e;
    e.terms_[Key{exp, {}}] = 1;
    return e;
}

K0Elem K0Elem::symbol(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("K0Elem: empty symbol name");
    K0Elem e;
    e.terms_[Key{0, {name}}] = 1;
    return e;
}

void K0Elem::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

std::optional<Rat> K0Elem::as_rat() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1) {
        const auto& [k, c] = *terms_.begin();
        if (k.l_exp == 0 && k.symbols.empty()) return c;
    }
    return std::nullopt;
}

std::vector<std::string> K0Elem::symbol_names() const {
    std::vector<std::string> out;
    for (const auto& [k, c] : terms_)
        for (const auto& s : k.symbols)
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

K0Elem K0Elem::operator+(const K0Elem& o) const {
    K0Elem e = *this;
    for (const auto& [k, c] : o.terms_) e.terms_[k] += c;
    e.prune();
    return e;
}

K0Elem K0Elem::operator-(const K0Elem& o) const {
    K0Elem e = *this;
    for (const auto& [k, c] : o.terms_) e.terms_[k] -= c;
    e.prune();
    return e;
}

K0Elem K0Elem::operator-() const { return K0Elem().operator-(*this); }

K0Elem K0Elem::operator*(const K0Elem& o) const {
    K0Elem e;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k;
            k.l_exp = ka.l_exp + kb.l_exp;
            k.symbols = ka.symbols;
            k.symbols.insert(k.symbols.end(), kb.symbols.begin(), kb.symbols.end());
            std::sort(k.symbols.begin(), k.symbols.end());
            e.terms_[k] += ca * cb;
        }
    e.prune();
    return e;
}

K0Elem K0Elem::scaled(const Rat& c) const {
    K0Elem e;
    if (c == 0) return e;
    for (const auto& [k, v] : terms_) e.terms_[k] = v * c;
    return e;
}

K0Elem K0Elem::pow(long e) const {
    if (e >= 0) {
        K0Elem acc = one();
        for (long i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }
    if (terms_.size() != 1 || !terms_.begin()->first.symbols.empty())
        throw std::domain_error("K0Elem: negative powers only for monomials in L");
    const auto& [k, c] = *terms_.begin();
    K0Elem inv;
    inv.terms_[Key{-k.l_exp, {}}] = Rat(1) / c;
    return inv.pow(-e);
}

std::string K0Elem::to_string() const {
    if (terms_.empty()) return "0";
    // pure L-terms first (highest power first), then symbol terms
    std::vector<std::pair<Key, Rat>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.symbols != b.first.symbols) return a.first.symbols < b.first.symbols;
        return a.first.l_exp > b.first.l_exp;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : items) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        if (key.l_exp != 0) {
            mono = "L";
            if (key.l_exp != 1) mono += "^" + std::to_string(key.l_exp);
        }
        for (const auto& s : key.symbols) {
            if (!mono.empty()) mono += "*";
            mono += "'" + s + "'";
        }
        if (mono.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << mono;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// expression parser shared by K0Elem and UVPoly

namespace {

template <class Value, class Atom>
class ExprParser {
public:
    ExprParser(const std::string& text, Atom atom) : s_(text), atom_(atom) {}

    Value run() {
        Value v = expr();
        skip();
        if (pos_ != s_.size())
            throw std::invalid_argument("expression syntax error at '" + s_.substr(pos_) + "'");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    Value expr() {
        bool neg = eat('-');
        if (!neg) eat('+');
        Value acc = term();
        if (neg) acc = acc.scaled(Rat(-1));
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    Value term() {
        Value acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                Value d = factor();
                Rat c = constant_of(d);
                if (c == 0) throw std::invalid_argument("expression: division by zero");
                acc = acc.scaled(Rat(1) / c);
            } else {
                break;
            }
        }
        return acc;
    }

    Value factor() {
        Value base = atom_value();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) throw std::invalid_argument("expression: expected exponent");
            long e = std::stol(s_.substr(start, pos_ - start));
            return power(base, neg ? -e : e);
        }
        return base;
    }

    Value atom_value() {
        skip();
        if (pos_ >= s_.size()) throw std::invalid_argument("expression: unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!eat(')')) throw std::invalid_argument("expression: missing ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return atom_value().scaled(Rat(-1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return make_const(Rat(Int(s_.substr(start, pos_ - start))));
        }
        return atom_(*this);
    }

public:
    // helpers available to the atom hook
    const std::string& text() const { return s_; }
    std::size_t& pos() { return pos_; }

    static Rat constant_of(const Value& v) {
        auto c = v.as_rat_hook();
        if (!c) throw std::invalid_argument("expression: division by a non-constant");
        return *c;
    }
    static Value make_const(const Rat& c) { return Value::const_hook(c); }
    static Value power(const Value& base, long e) { return base.pow_hook(e); }

private:
    const std::string& s_;
    Atom atom_;
    std::size_t pos_ = 0;
};

// adapter giving K0Elem the hooks the parser needs
struct K0Value {
    K0Elem e;
    K0Value operator+(const K0Value& o) const { return {e + o.e}; }
    K0Value operator-(const K0Value& o) const { return {e - o.e}; }
    K0Value operator*(const K0Value& o) const { return {e * o.e}; }
    K0Value scaled(const Rat& c) const { return {e.scaled(c)}; }
    std::optional<Rat> as_rat_hook() const { return e.as_rat(); }
    static K0Value const_hook(const Rat& c) { return {K0Elem::from_rat(c)}; }
    K0Value pow_hook(long exp) const { return {e.pow(exp)}; }
};

struct UVValue {
    UVPoly f;
    UVValue operator+(const UVValue& o) const { return {f + o.f}; }
    UVValue operator-(const UVValue& o) const { return {f - o.f}; }
    UVValue operator*(const UVValue& o) const { return {f * o.f}; }
    UVValue scaled(const Rat& c) const { return {f.scaled(c)}; }
    std::optional<Rat> as_rat_hook() const {
        if (f.is_zero()) return Rat(0);
        if (f.terms().size() == 1 && f.terms().begin()->first == std::make_pair(0l, 0l))
            return f.terms().begin()->second;
        return std::nullopt;
    }
    static UVValue const_hook(const Rat& c) { return {UVPoly::constant(c)}; }
    UVValue pow_hook(long exp) const {
        if (exp < 0) {
            if (f.terms().size() != 1)
                throw std::domain_error("uv expression: negative powers only for monomials");
            auto [k, c] = *f.terms().begin();
            UVPoly inv = UVPoly::monomial(Rat(1) / c, -k.first, -k.second);
            UVValue v{inv};
            return v.pow_hook(-exp);
        }
        UVValue acc{UVPoly::constant(Rat(1))};
        for (long i = 0; i < exp; ++i) acc = acc * *this;
        return acc;
    }
};

} // namespace

K0Elem K0Elem::parse(const std::string& text) {
    auto atom = [](auto& parser) -> K0Value {
        const std::string& s = parser.text();
        std::size_t& pos = parser.pos();
        char c = s[pos];
        if (c == 'L') {
            ++pos;
            return {K0Elem::lefschetz()};
        }
        if (c == '\'' || c == '"') {
            char quote = c;
            std::size_t end = s.find(quote, pos + 1);
            if (end == std::string::npos)
                throw std::invalid_argument("expression: unterminated symbol name");
            std::string name = s.substr(pos + 1, end - pos - 1);
            pos = end + 1;
            return {K0Elem::symbol(name)};
        }
        throw std::invalid_argument(std::string("expression syntax error at '") + c + "'");
    };
    return ExprParser<K0Value, decltype(atom)>(text, atom).run().e;
}

UVPoly UVPoly::parse(const std::string& text) {
    auto atom = [](auto& parser) -> UVValue {
        const std::string& s = parser.text();
        std::size_t& pos = parser.pos();
        char c = s[pos];
        if (c == 'u') {
            ++pos;
            return {UVPoly::monomial(Rat(1), 1, 0)};
        }
        if (c == 'v') {
            ++pos;
            return {UVPoly::monomial(Rat(1), 0, 1)};
        }
        throw std::invalid_argument(std::string("uv expression syntax error at '") + c + "'");
    };
    return ExprParser<UVValue, decltype(atom)>(text, atom).run().f;
}

// ---------------------------------------------------------------------------
// specialization

SpecValue specialize(const K0Elem& e, const SpecializationMap& s) {
    auto scalar_symbol = [&](const std::string& name) -> Rat {
        auto it = s.scalar_values.find(name);
        if (it == s.scalar_values.end())
            throw std::invalid_argument("specialize: unassigned symbol '" + name + "'");
        return it->second;
    };
    switch (s.kind) {
        case SpecializationMap::Kind::Counting: {
            if (s.q < 2) throw std::invalid_argument("specialize: counting needs q >= 2");
            Rat acc(0);
            for (const auto& [k, c] : e.terms()) {
                Rat t = c * rat_pow(Rat(s.q), k.l_exp);
                for (const auto& sym : k.symbols) t *= scalar_symbol(sym);
                acc += t;
            }
            return acc;
        }
        case SpecializationMap::Kind::Euler: {
            Rat acc(0);
            for (const auto& [k, c] : e.terms()) {
                Rat t = c; // L -> 1
                for (const auto& sym : k.symbols) t *= scalar_symbol(sym);
                acc += t;
            }
            return acc;
        }
        case SpecializationMap::Kind::Hodge: {
            UVPoly acc;
            for (const auto& [k, c] : e.terms()) {
                UVPoly t = UVPoly::monomial(c, k.l_exp, k.l_exp); // L -> uv
                for (const auto& sym : k.symbols) {
                    auto it = s.hodge_values.find(sym);
                    if (it == s.hodge_values.end())
                        throw std::invalid_argument("specialize: unassigned symbol '" + sym + "'");
                    t = t * it->second;
                }
                acc = acc + t;
            }
            return acc;
        }
    }
    throw std::logic_error("specialize: unknown kind");
}

std::string spec_value_to_string(const SpecValue& v) {
    if (std::holds_alternative<Rat>(v)) return std::get<Rat>(v).get_str();
    return std::get<UVPoly>(v).to_string();
}

} // namespace zetaforge

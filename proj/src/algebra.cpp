#include "ltorus/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ltorus/errors.hpp"

namespace ltorus {

// ---------------------------------------------------------------- ZPoly

ZPoly ZPoly::monomial(int z_exp, Int c) {
    ZPoly p;
    if (c != 0) p.terms_[z_exp] = std::move(c);
    return p;
}

Int ZPoly::coeff(int z_exp) const {
    auto it = terms_.find(z_exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int ZPoly::min_degree() const {
    if (terms_.empty()) throw UndefinedOnZero("min_degree of zero polynomial");
    return terms_.begin()->first;
}

int ZPoly::max_degree() const {
    if (terms_.empty()) throw UndefinedOnZero("max_degree of zero polynomial");
    return terms_.rbegin()->first;
}

void ZPoly::add_term(int z_exp, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(z_exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ZPoly ZPoly::operator-() const {
    ZPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    ZPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

// ---------------------------------------------------------------- AZPoly

AZPoly::AZPoly(const ZPoly& z) {
    for (const auto& [e, c] : z.terms_) terms_[{0, e}] = c;
}

AZPoly AZPoly::monomial(int a_exp, int z_exp, Int c) {
    AZPoly p;
    if (c != 0) p.terms_[{a_exp, z_exp}] = std::move(c);
    return p;
}

ZPoly AZPoly::coeff_a(int e) const {
    ZPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first == e) r.add_term(k.second, c);
    return r;
}

int AZPoly::a_degree() const {
    if (terms_.empty()) throw UndefinedOnZero("a_degree of zero polynomial");
    return terms_.begin()->first.first;  // keys sorted by descending a-exponent
}

void AZPoly::add_term(int a_exp, int z_exp, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({a_exp, z_exp}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AZPoly& AZPoly::operator+=(const AZPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

AZPoly& AZPoly::operator-=(const AZPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

AZPoly AZPoly::operator-() const {
    AZPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

AZPoly AZPoly::operator*(const AZPoly& o) const {
    AZPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

AZPoly loop_value() {
    AZPoly d = AZPoly::monomial(1, -1);
    d += AZPoly::monomial(-1, -1, -1);
    d += AZPoly(1);
    return d;
}

// ------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw ParseError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::concat(const Partition& o) const {
    std::vector<int> merged = parts_;
    merged.insert(merged.end(), o.parts_.begin(), o.parts_.end());
    return Partition(std::move(merged));
}

bool Partition::size_lex_less(const Partition& l, const Partition& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l.parts_ > r.parts_;  // lexicographically descending within a size
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------- SkeinElement

SkeinElement SkeinElement::basis(Partition lambda, AZPoly coeff) {
    SkeinElement s;
    if (!coeff.is_zero()) s.terms_[std::move(lambda)] = std::move(coeff);
    return s;
}

AZPoly SkeinElement::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? AZPoly() : it->second;
}

SkeinElement SkeinElement::coeff_a(int e) const {
    SkeinElement r;
    for (const auto& [lam, p] : terms_) {
        AZPoly part(p.coeff_a(e));
        if (!part.is_zero()) r.terms_[lam] = part;
    }
    return r;
}

int SkeinElement::a_degree() const {
    if (terms_.empty()) throw UndefinedOnZero("a_degree of zero skein element");
    bool first = true;
    int best = 0;
    for (const auto& [lam, p] : terms_) {
        int d = p.a_degree();
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

void SkeinElement::add_term(const Partition& lambda, const AZPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(lambda, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
    for (const auto& [lam, p] : o.terms_) add_term(lam, p);
    return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
    for (const auto& [lam, p] : o.terms_) add_term(lam, -p);
    return *this;
}

SkeinElement SkeinElement::operator-() const {
    SkeinElement r;
    for (const auto& [lam, p] : terms_) r.terms_[lam] = -p;
    return r;
}

SkeinElement SkeinElement::operator*(const SkeinElement& o) const {
    SkeinElement r;
    for (const auto& [l1, p1] : terms_)
        for (const auto& [l2, p2] : o.terms_) r.add_term(l1.concat(l2), p1 * p2);
    return r;
}

// ------------------------------------------------------- text rendering

namespace {

struct FlatTerm {
    std::vector<int> partition;  // descending parts, possibly empty
    int a = 0;
    int z = 0;
    Int c;
};

// Canonical order: a descending, z ascending, partition lexicographically
// descending.
bool flat_less(const FlatTerm& l, const FlatTerm& r) {
    if (l.a != r.a) return l.a > r.a;
    if (l.z != r.z) return l.z < r.z;
    return l.partition > r.partition;
}

std::string render_terms(std::vector<FlatTerm> ts) {
    if (ts.empty()) return "0";
    std::sort(ts.begin(), ts.end(), flat_less);
    std::string out;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) out += " + ";
        const FlatTerm& t = ts[i];
        std::vector<std::string> factors;
        if (t.a != 0) factors.push_back(t.a == 1 ? "a" : "a^" + std::to_string(t.a));
        if (t.z != 0) factors.push_back(t.z == 1 ? "z" : "z^" + std::to_string(t.z));
        for (int p : t.partition) factors.push_back("A_" + std::to_string(p));
        std::string body;
        if (factors.empty()) {
            body = t.c.str();
        } else {
            if (t.c == -1) body = "-";
            else if (t.c != 1) body = t.c.str() + "*";
            for (size_t f = 0; f < factors.size(); ++f) {
                if (f) body += "*";
                body += factors[f];
            }
        }
        out += body;
    }
    return out;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool done() { skip_ws(); return pos >= s.size(); }

    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer at position " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    int parse_exponent() {
        if (accept('^')) return static_cast<int>(parse_int());
        return 1;
    }

    // term := [coeff] ('*'? factor)*   factor := a[^e] | z[^e] | A_p
    FlatTerm parse_term() {
        FlatTerm t;
        t.c = 1;
        skip_ws();
        bool saw_any = false;
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' || s[pos] == '+')) {
            // a bare '-' directly before a factor means coefficient -1
            if ((s[pos] == '-' || s[pos] == '+') &&
                !(pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
                t.c = s[pos] == '-' ? -1 : 1;
                ++pos;
            } else {
                t.c = parse_int();
            }
            saw_any = true;
        }
        while (true) {
            skip_ws();
            size_t before = pos;
            accept('*');
            skip_ws();
            if (pos < s.size() && s[pos] == 'a') {
                ++pos;
                t.a += parse_exponent();
            } else if (pos < s.size() && s[pos] == 'z') {
                ++pos;
                t.z += parse_exponent();
            } else if (pos + 1 < s.size() && s[pos] == 'A' && s[pos + 1] == '_') {
                pos += 2;
                t.partition.push_back(static_cast<int>(parse_int()));
            } else {
                pos = before;
                break;
            }
            saw_any = true;
        }
        if (!saw_any) throw ParseError("expected term at position " + std::to_string(pos));
        std::sort(t.partition.begin(), t.partition.end(), std::greater<int>());
        return t;
    }

    std::vector<FlatTerm> parse_sum() {
        std::vector<FlatTerm> ts;
        skip_ws();
        if (done()) return ts;
        ts.push_back(parse_term());
        while (!done()) {
            skip_ws();
            if (accept('+')) {
                ts.push_back(parse_term());
            } else if (pos < s.size() && s[pos] == '-') {
                ts.push_back(parse_term());  // sign carried by the coefficient
            } else {
                throw ParseError("unexpected input at position " + std::to_string(pos));
            }
        }
        return ts;
    }
};

std::vector<FlatTerm> parse_flat(const std::string& text) {
    Parser p(text);
    auto ts = p.parse_sum();
    // "0" parses as the single term 0, dropped on reassembly
    return ts;
}

}  // namespace

std::string ZPoly::str() const {
    std::vector<FlatTerm> ts;
    for (const auto& [e, c] : terms_) ts.push_back({{}, 0, e, c});
    return render_terms(std::move(ts));
}

ZPoly ZPoly::parse(const std::string& text) {
    ZPoly r;
    for (const auto& t : parse_flat(text)) {
        if (t.a != 0 || !t.partition.empty())
            throw ParseError("unexpected a or A_ factor in z-polynomial");
        r.add_term(t.z, t.c);
    }
    return r;
}

std::string AZPoly::str() const {
    std::vector<FlatTerm> ts;
    for (const auto& [k, c] : terms_) ts.push_back({{}, k.first, k.second, c});
    return render_terms(std::move(ts));
}

AZPoly AZPoly::parse(const std::string& text) {
    AZPoly r;
    for (const auto& t : parse_flat(text)) {
        if (!t.partition.empty()) throw ParseError("unexpected A_ factor in (a,z)-polynomial");
        r.add_term(t.a, t.z, t.c);
    }
    return r;
}

std::string SkeinElement::str() const {
    std::vector<FlatTerm> ts;
    for (const auto& [lam, p] : terms_)
        for (const auto& [k, c] : p.terms()) ts.push_back({lam.parts(), k.first, k.second, c});
    return render_terms(std::move(ts));
}

SkeinElement SkeinElement::parse(const std::string& text) {
    SkeinElement r;
    for (const auto& t : parse_flat(text))
        r.add_term(Partition(t.partition), AZPoly::monomial(t.a, t.z, t.c));
    return r;
}

}  // namespace ltorus

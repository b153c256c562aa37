#include "mmppf/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>
#include <sstream>

namespace mmppf {

std::string spell(MetaSym s) {
    switch (s) {
        case MetaSym::Zero: return "0";
        case MetaSym::One: return "1";
        case MetaSym::Tilde: return "~";
        case MetaSym::B1: return "b1";
        case MetaSym::B2: return "b2";
        case MetaSym::G1: return "g1";
        case MetaSym::G2: return "g2";
        case MetaSym::D1: return "d1";
        case MetaSym::D2: return "d2";
        case MetaSym::K1: return "k1";
        case MetaSym::K2: return "k2";
        case MetaSym::T1: return "t1";
        case MetaSym::T2: return "t2";
        case MetaSym::T3: return "t3";
        case MetaSym::T4: return "t4";
    }
    return "?";
}

bool in_sigma12(MetaSym s) {
    return s == MetaSym::Zero || s == MetaSym::One || s == MetaSym::Tilde ||
           s == MetaSym::B1 || s == MetaSym::B2;
}

bool in_sigma34(MetaSym s) {
    return s == MetaSym::Tilde || s == MetaSym::G1 || s == MetaSym::G2 ||
           s == MetaSym::D1 || s == MetaSym::D2;
}

bool in_pi(MetaSym s) {
    return s == MetaSym::K1 || s == MetaSym::K2 || s == MetaSym::T1 ||
           s == MetaSym::T2 || s == MetaSym::T3 || s == MetaSym::T4;
}

namespace {

struct Token {
    enum Kind { Punct, Ident, Number, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << current_.line << ":" << current_.col << ": " << what;
        if (current_.kind != Token::End) os << " (got '" << current_.text << "')";
        throw Error("SYNTAX_ERROR", os.str());
    }

    Token expect_punct(const std::string& p) {
        if (current_.kind != Token::Punct || current_.text != p)
            fail("expected '" + p + "'");
        return take();
    }

    Token expect_ident() {
        if (current_.kind != Token::Ident) fail("expected identifier");
        return take();
    }

    Token expect_number() {
        if (current_.kind != Token::Number) fail("expected number");
        return take();
    }

    bool at_punct(const std::string& p) const {
        return current_.kind == Token::Punct && current_.text == p;
    }

    bool eat_punct(const std::string& p) {
        if (!at_punct(p)) return false;
        take();
        return true;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_ = Token{Token::End, "", line_, col_};
        if (pos_ >= text_.size()) return;

        static const char* puncts[] = {"->>", "~>", "//", "<|", "@=", "|>", "^", "~", "[",
                                       "]",   "|",  "(",  ")",  "{",  "}",  ",", ":", ";", "_"};
        for (const char* p : puncts) {
            size_t n = std::strlen(p);
            if (text_.compare(pos_, n, p) == 0) {
                current_ = Token{Token::Punct, p, line_, col_};
                pos_ += n;
                col_ += static_cast<int>(n);
                return;
            }
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_ = Token{Token::Number, text_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = Token{Token::Ident, text_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        std::ostringstream os;
        os << line_ << ":" << col_ << ": stray character '" << c << "'";
        throw Error("SYNTAX_ERROR", os.str());
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

[[noreturn]] void unknown(const Token& t, const std::string& kind) {
    std::ostringstream os;
    os << t.line << ":" << t.col << ": " << kind << " '" << t.text << "' is not declared";
    throw Error("UNKNOWN_SYMBOL", os.str());
}

Condition parse_condition(Lexer& lx) {
    Token t = lx.expect_ident();
    if (t.text == "e") return Condition::Epsilon;
    if (t.text == "h") return Condition::Hypothetical;
    lx.fail("expected condition 'e' or 'h'");
}

Situator parse_situator(Lexer& lx) {
    if (lx.eat_punct("<|")) return Situator::Past;
    if (lx.eat_punct("@=")) return Situator::Present;
    if (lx.eat_punct("|>")) return Situator::Future;
    lx.fail("expected situator '<|', '@=' or '|>'");
}

int parse_object(const Signature& sig, Lexer& lx) {
    Token t = lx.expect_ident();
    int o = sig.object_index(t.text);
    if (o < 0) unknown(t, "object");
    return o;
}

MetaSym parse_meta_symbol(Lexer& lx) {
    if (lx.eat_punct("~")) return MetaSym::Tilde;
    if (lx.peek().kind == Token::Number) {
        Token t = lx.take();
        if (t.text == "0") return MetaSym::Zero;
        if (t.text == "1") return MetaSym::One;
        lx.fail("expected a metainformation symbol");
    }
    Token t = lx.expect_ident();
    for (MetaSym s : {MetaSym::B1, MetaSym::B2, MetaSym::G1, MetaSym::G2, MetaSym::D1,
                      MetaSym::D2, MetaSym::K1, MetaSym::K2, MetaSym::T1, MetaSym::T2,
                      MetaSym::T3, MetaSym::T4})
        if (spell(s) == t.text) return s;
    unknown(t, "metainformation symbol");
}

PropertyValue parse_value_tuple(const Signature& sig, int property, Lexer& lx) {
    const PropertyDef& def = sig.properties[property];
    lx.expect_punct("(");
    PropertyValue v;
    for (int q = 0; q < def.dim; ++q) {
        if (q) lx.expect_punct(",");
        Token t = lx.peek().kind == Token::Number ? lx.take() : lx.expect_ident();
        const auto& domain = def.domains[q];
        auto it = std::find(domain.begin(), domain.end(), t.text);
        if (it == domain.end()) unknown(t, "value symbol");
        v.components.push_back(static_cast<int>(it - domain.begin()));
    }
    lx.expect_punct(")");
    return v;
}

AssignmentSet parse_assignment_set(const Signature& sig, int property, Lexer& lx) {
    AssignmentSet set;
    if (lx.eat_punct("_")) return set;
    lx.expect_punct("{");
    if (!lx.at_punct("}")) {
        while (true) {
            lx.expect_punct("(");
            Token ht = lx.expect_ident();
            int h = sig.essence_index(ht.text);
            if (h < 0) unknown(ht, "essence");
            lx.expect_punct(",");
            PropertyValue v = parse_value_tuple(sig, property, lx);
            lx.expect_punct(")");
            set.emplace_back(h, v);
            if (!lx.eat_punct(",")) break;
        }
    }
    lx.expect_punct("}");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

PlAtomic parse_pl_atomic(const Signature& sig, Lexer& lx) {
    PlAtomic a;
    lx.expect_punct("[");
    a.cond = parse_condition(lx);
    lx.expect_punct("|");
    a.sit = parse_situator(lx);
    lx.expect_punct("|");
    Token kw = lx.expect_ident();
    if (kw.text == "obj") {
        TypeIBody b;
        b.object = parse_object(sig, lx);
        lx.expect_punct(":");
        for (int p = 0; p < sig.property_count(); ++p) {
            if (p) lx.expect_punct(";");
            b.sets.push_back(parse_assignment_set(sig, p, lx));
        }
        a.body = std::move(b);
    } else if (kw.text == "rel") {
        TypeIIBody b;
        Token s = lx.expect_ident();
        if (s.text != "S") lx.fail("expected relation symbol 'S'");
        lx.expect_punct("[");
        b.subject = parse_object(sig, lx);
        lx.expect_punct(",");
        Token pt = lx.expect_number();
        b.property = std::stoi(pt.text);
        if (b.property < 0 || b.property >= sig.property_count()) unknown(pt, "property");
        lx.expect_punct("]");
        b.target = parse_object(sig, lx);
        a.body = b;
    } else if (kw.text == "act") {
        TypeIIIBody b;
        b.object = parse_object(sig, lx);
        lx.expect_punct(":");
        lx.expect_punct("(");
        for (int p = 0; p < sig.property_count(); ++p) {
            if (p) lx.expect_punct(",");
            Token at = lx.expect_ident();
            int idx = sig.action_index(b.object, p, at.text);
            if (idx < 0) unknown(at, "action");
            b.actions.push_back(idx);
        }
        lx.expect_punct(")");
        a.body = std::move(b);
    } else {
        lx.fail("expected atom keyword 'obj', 'rel' or 'act'");
    }
    lx.expect_punct("]");
    return a;
}

PlStarAtomic parse_star_atomic(const Signature& sig, Lexer& lx) {
    PlStarAtomic a;
    lx.expect_punct("[");
    a.cond = parse_condition(lx);
    lx.expect_punct("|");
    a.sit = parse_situator(lx);
    lx.expect_punct("|");
    Token kw = lx.expect_ident();
    if (kw.text == "meta") {
        MetaIBody b;
        b.object = parse_object(sig, lx);
        lx.expect_punct(":");
        for (int p = 0; p < sig.property_count(); ++p) {
            if (p) lx.expect_punct(";");
            MetaSym s = parse_meta_symbol(lx);
            if (!in_sigma12(s)) lx.fail("symbol outside Sigma1 u Sigma2");
            b.symbols.push_back(s);
        }
        a.body = std::move(b);
    } else if (kw.text == "metac") {
        MetaComponentBody b;
        b.object = parse_object(sig, lx);
        lx.expect_punct("[");
        Token pt = lx.expect_number();
        b.property = std::stoi(pt.text);
        if (b.property < 0 || b.property >= sig.property_count()) unknown(pt, "property");
        lx.expect_punct(",");
        Token qt = lx.expect_number();
        b.dimension = std::stoi(qt.text);
        if (b.dimension < 1 || b.dimension > sig.properties[b.property].dim)
            unknown(qt, "dimension");
        lx.expect_punct("]");
        lx.expect_punct(":");
        b.symbol = parse_meta_symbol(lx);
        if (!in_sigma34(b.symbol)) lx.fail("symbol outside Sigma3 u Sigma4");
        a.body = b;
    } else if (kw.text == "metar") {
        MetaRelationalBody b;
        b.subject = parse_object(sig, lx);
        b.target = parse_object(sig, lx);
        lx.expect_punct(":");
        b.symbol = parse_meta_symbol(lx);
        if (!in_pi(b.symbol)) lx.fail("symbol outside Pi1 u Pi2");
        a.body = b;
    } else {
        lx.fail("expected atom keyword 'meta', 'metac' or 'metar'");
    }
    lx.expect_punct("]");
    return a;
}

ClAtomic parse_cl_atomic(const Signature& sig, Lexer& lx) {
    ClAtomic a;
    lx.expect_punct("[");
    a.cond = parse_condition(lx);
    lx.expect_punct("|");
    a.sit = parse_situator(lx);
    lx.expect_punct("|");
    Token kw = lx.expect_ident();
    if (kw.text != "int") lx.fail("expected atom keyword 'int'");
    if (lx.peek().kind == Token::Ident && lx.peek().text == "pat") {
        lx.take();
        a.obj.pattern = lx.expect_ident().text;
    } else {
        a.obj.object = parse_object(sig, lx);
    }
    if (lx.peek().kind == Token::Number) {
        Token pt = lx.take();
        int p = std::stoi(pt.text);
        if (p < 0 || p >= sig.property_count()) unknown(pt, "property");
        if (lx.peek().kind == Token::Number) {
            // A second number closes the atom as a Sigma1 symbol; otherwise
            // it is a dimension and a component symbol follows.
            Token qt = lx.take();
            if (lx.at_punct("]")) {
                ClPropMeta b;
                b.property = p;
                if (qt.text == "0")
                    b.symbol = MetaSym::Zero;
                else if (qt.text == "1")
                    b.symbol = MetaSym::One;
                else
                    lx.fail("expected a metainformation symbol");
                a.body = b;
            } else {
                ClCompMeta b;
                b.property = p;
                b.dimension = std::stoi(qt.text);
                if (b.dimension < 1 || b.dimension > sig.properties[p].dim)
                    unknown(qt, "dimension");
                b.symbol = parse_meta_symbol(lx);
                if (!in_sigma34(b.symbol)) lx.fail("symbol outside Sigma3 u Sigma4");
                a.body = b;
            }
        } else {
            ClPropMeta b;
            b.property = p;
            b.symbol = parse_meta_symbol(lx);
            if (!in_sigma12(b.symbol)) lx.fail("symbol outside Sigma1 u Sigma2");
            a.body = b;
        }
    } else {
        ClRelMeta b;
        b.target = parse_object(sig, lx);
        b.symbol = parse_meta_symbol(lx);
        if (!in_pi(b.symbol)) lx.fail("symbol outside Pi1 u Pi2");
        a.body = b;
    }
    lx.expect_punct("]");
    return a;
}

template <typename Atomic, typename ParseAtom>
BasicFormula<Atomic> parse_formula(Lexer& lx, ParseAtom parse_atom) {
    BasicFormula<Atomic> f;
    while (true) {
        BasicChain<Atomic> chain;
        while (true) {
            BasicBlock<Atomic> block;
            block.atoms.push_back(parse_atom(lx));
            while (lx.eat_punct("^")) block.atoms.push_back(parse_atom(lx));
            chain.blocks.push_back(std::move(block));
            if (lx.eat_punct("->>"))
                chain.joins.push_back(Join::Next);
            else if (lx.eat_punct("~>"))
                chain.joins.push_back(Join::Eventually);
            else
                break;
        }
        f.chains.push_back(std::move(chain));
        if (!lx.eat_punct("//")) break;
    }
    if (lx.peek().kind != Token::End) lx.fail("trailing input after formula");
    return f;
}

std::string print_condition(Condition c) { return c == Condition::Epsilon ? "e" : "h"; }

std::string print_situator(Situator s) {
    switch (s) {
        case Situator::Past: return "<|";
        case Situator::Present: return "@=";
        case Situator::Future: return "|>";
    }
    return "?";
}

void print_value_tuple(std::ostream& os, const Signature& sig, int property,
                       const PropertyValue& v) {
    os << "(";
    for (size_t q = 0; q < v.components.size(); ++q) {
        if (q) os << ",";
        os << sig.properties[property].domains[q][v.components[q]];
    }
    os << ")";
}

void print_pl_atomic(std::ostream& os, const Signature& sig, const PlAtomic& a) {
    os << "[" << print_condition(a.cond) << "|" << print_situator(a.sit) << "|";
    if (const TypeIBody* b = std::get_if<TypeIBody>(&a.body)) {
        os << "obj " << sig.objects[b->object] << ": ";
        for (int p = 0; p < sig.property_count(); ++p) {
            if (p) os << ";";
            const AssignmentSet& set = b->sets[p];
            if (set.empty()) {
                os << "_";
            } else {
                os << "{";
                for (size_t k = 0; k < set.size(); ++k) {
                    if (k) os << ",";
                    os << "(" << sig.essences[set[k].first] << ",";
                    print_value_tuple(os, sig, p, set[k].second);
                    os << ")";
                }
                os << "}";
            }
        }
    } else if (const TypeIIBody* b2 = std::get_if<TypeIIBody>(&a.body)) {
        os << "rel S[" << sig.objects[b2->subject] << "," << b2->property << "] "
           << sig.objects[b2->target];
    } else {
        const TypeIIIBody& b3 = std::get<TypeIIIBody>(a.body);
        os << "act " << sig.objects[b3.object] << ": (";
        for (int p = 0; p < sig.property_count(); ++p) {
            if (p) os << ",";
            os << sig.action(b3.object, p, b3.actions[p]).id;
        }
        os << ")";
    }
    os << "]";
}

void print_star_atomic(std::ostream& os, const Signature& sig, const PlStarAtomic& a) {
    os << "[" << print_condition(a.cond) << "|" << print_situator(a.sit) << "|";
    if (const MetaIBody* b = std::get_if<MetaIBody>(&a.body)) {
        os << "meta " << sig.objects[b->object] << ": ";
        for (size_t p = 0; p < b->symbols.size(); ++p) {
            if (p) os << ";";
            os << spell(b->symbols[p]);
        }
    } else if (const MetaComponentBody* b2 = std::get_if<MetaComponentBody>(&a.body)) {
        os << "metac " << sig.objects[b2->object] << "[" << b2->property << ","
           << b2->dimension << "]: " << spell(b2->symbol);
    } else {
        const MetaRelationalBody& b3 = std::get<MetaRelationalBody>(a.body);
        os << "metar " << sig.objects[b3.subject] << " " << sig.objects[b3.target] << ": "
           << spell(b3.symbol);
    }
    os << "]";
}

void print_cl_atomic(std::ostream& os, const Signature& sig, const ClAtomic& a) {
    os << "[" << print_condition(a.cond) << "|" << print_situator(a.sit) << "|int ";
    if (a.obj.pattern.empty())
        os << sig.objects[a.obj.object];
    else
        os << "pat " << a.obj.pattern;
    if (const ClPropMeta* b = std::get_if<ClPropMeta>(&a.body)) {
        os << " " << b->property << " " << spell(b->symbol);
    } else if (const ClCompMeta* b2 = std::get_if<ClCompMeta>(&a.body)) {
        os << " " << b2->property << " " << b2->dimension << " " << spell(b2->symbol);
    } else {
        const ClRelMeta& b3 = std::get<ClRelMeta>(a.body);
        os << " " << sig.objects[b3.target] << " " << spell(b3.symbol);
    }
    os << "]";
}

template <typename Atomic, typename PrintAtom>
std::string print_formula(const BasicFormula<Atomic>& f, PrintAtom print_atom) {
    std::ostringstream os;
    for (size_t c = 0; c < f.chains.size(); ++c) {
        if (c) os << " // ";
        const BasicChain<Atomic>& chain = f.chains[c];
        for (size_t b = 0; b < chain.blocks.size(); ++b) {
            if (b) os << (chain.joins[b - 1] == Join::Next ? " ->> " : " ~> ");
            const auto& atoms = chain.blocks[b].atoms;
            for (size_t k = 0; k < atoms.size(); ++k) {
                if (k) os << " ^ ";
                print_atom(os, atoms[k]);
            }
        }
    }
    return os.str();
}

template <typename Atomic>
void canonicalize_impl(BasicFormula<Atomic>& f) {
    for (auto& chain : f.chains)
        for (auto& block : chain.blocks) std::sort(block.atoms.begin(), block.atoms.end());
}

// Junction pairs licensed by the wff rules: past may repeat or step to the
// present, the present steps to the future, the future repeats.
bool junction_allowed(Situator left, Situator right) {
    if (left == Situator::Past) return right != Situator::Future;
    if (left == Situator::Present) return right == Situator::Future;
    return right == Situator::Future;
}

template <typename Atomic, typename DupRules>
std::vector<WffViolation> check_wff_impl(const BasicFormula<Atomic>& f, DupRules dup_rules) {
    std::vector<WffViolation> out;
    for (size_t c = 0; c < f.chains.size(); ++c) {
        const BasicChain<Atomic>& chain = f.chains[c];
        std::vector<bool> uniform(chain.blocks.size(), true);
        for (size_t b = 0; b < chain.blocks.size(); ++b) {
            const auto& atoms = chain.blocks[b].atoms;
            for (const Atomic& a : atoms)
                if (a.cond != atoms[0].cond || a.sit != atoms[0].sit) {
                    uniform[b] = false;
                    break;
                }
            if (!uniform[b])
                out.push_back({1, "rule 1: conjuncts of chain " + std::to_string(c + 1) +
                                      " block " + std::to_string(b + 1) +
                                      " disagree on condition or situator"});
            dup_rules(out, c, b, atoms);
        }
        for (size_t j = 0; j + 1 < chain.blocks.size(); ++j) {
            if (!uniform[j] || !uniform[j + 1]) continue;
            Situator l = chain.blocks[j].atoms[0].sit;
            Situator r = chain.blocks[j + 1].atoms[0].sit;
            if (!junction_allowed(l, r)) {
                int rule = chain.joins[j] == Join::Next ? 2 : 3;
                out.push_back({rule, "rule " + std::to_string(rule) + ": junction " +
                                         std::to_string(j + 1) + " of chain " +
                                         std::to_string(c + 1) + " steps from " +
                                         print_situator(l) + " to " + print_situator(r)});
            }
        }
    }
    return out;
}

void duplicate_violation(std::vector<WffViolation>& out, int rule, size_t chain, size_t block,
                         const std::string& what, const std::string& object) {
    out.push_back({rule, "rule " + std::to_string(rule) + ": two " + what + " atoms for object " +
                             object + " in chain " + std::to_string(chain + 1) + " block " +
                             std::to_string(block + 1)});
}

}  // namespace

PlFormula parse_pl(const Signature& sig, const std::string& text) {
    Lexer lx(text);
    return parse_formula<PlAtomic>(lx, [&](Lexer& l) { return parse_pl_atomic(sig, l); });
}

PlStarFormula parse_star(const Signature& sig, const std::string& text) {
    Lexer lx(text);
    return parse_formula<PlStarAtomic>(lx, [&](Lexer& l) { return parse_star_atomic(sig, l); });
}

ClFormula parse_cl(const Signature& sig, const std::string& text) {
    Lexer lx(text);
    return parse_formula<ClAtomic>(lx, [&](Lexer& l) { return parse_cl_atomic(sig, l); });
}

std::string print_pl(const Signature& sig, const PlFormula& f) {
    return print_formula(f, [&](std::ostream& os, const PlAtomic& a) { print_pl_atomic(os, sig, a); });
}

std::string print_star(const Signature& sig, const PlStarFormula& f) {
    return print_formula(f,
                         [&](std::ostream& os, const PlStarAtomic& a) { print_star_atomic(os, sig, a); });
}

std::string print_cl(const Signature& sig, const ClFormula& f) {
    return print_formula(f, [&](std::ostream& os, const ClAtomic& a) { print_cl_atomic(os, sig, a); });
}

std::string print_atom(const Signature& sig, const PlAtomic& a) {
    std::ostringstream os;
    print_pl_atomic(os, sig, a);
    return os.str();
}

std::string print_atom(const Signature& sig, const PlStarAtomic& a) {
    std::ostringstream os;
    print_star_atomic(os, sig, a);
    return os.str();
}

std::string print_atom(const Signature& sig, const ClAtomic& a) {
    std::ostringstream os;
    print_cl_atomic(os, sig, a);
    return os.str();
}

void canonicalize(PlFormula& f) { canonicalize_impl(f); }
void canonicalize(PlStarFormula& f) { canonicalize_impl(f); }
void canonicalize(ClFormula& f) { canonicalize_impl(f); }

std::vector<WffViolation> check_wff(const Signature& sig, const PlFormula& f) {
    return check_wff_impl(f, [&](std::vector<WffViolation>& out, size_t c, size_t b,
                                 const std::vector<PlAtomic>& atoms) {
        std::set<int> state_objects, action_objects;
        for (const PlAtomic& a : atoms) {
            if (const TypeIBody* body = std::get_if<TypeIBody>(&a.body)) {
                if (!state_objects.insert(body->object).second)
                    duplicate_violation(out, 4, c, b, "state", sig.objects[body->object]);
            } else if (const TypeIIIBody* body3 = std::get_if<TypeIIIBody>(&a.body)) {
                if (!action_objects.insert(body3->object).second)
                    duplicate_violation(out, 5, c, b, "action", sig.objects[body3->object]);
            }
        }
    });
}

std::vector<WffViolation> check_wff(const Signature& sig, const PlStarFormula& f) {
    return check_wff_impl(f, [&](std::vector<WffViolation>& out, size_t c, size_t b,
                                 const std::vector<PlStarAtomic>& atoms) {
        std::set<int> meta_objects;
        for (const PlStarAtomic& a : atoms)
            if (const MetaIBody* body = std::get_if<MetaIBody>(&a.body))
                if (!meta_objects.insert(body->object).second)
                    duplicate_violation(out, 4, c, b, "state", sig.objects[body->object]);
    });
}

std::vector<WffViolation> check_wff(const Signature&, const ClFormula& f) {
    return check_wff_impl(f, [](std::vector<WffViolation>&, size_t, size_t,
                                const std::vector<ClAtomic>&) {});
}

}  // namespace mmppf

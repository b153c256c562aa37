#include "mmppf/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace mmppf {

std::string to_string(Cat c) {
    switch (c) {
        case Cat::Object: return "O";
        case Cat::Pattern: return "PO";
        case Cat::CondOfReality: return "CR";
        case Cat::TempSituator: return "TS";
        case Cat::MetaSymbol: return "MS";
        case Cat::Index: return "IX";
        case Cat::IntervalAtom: return "ATOM";
        case Cat::Register: return "RS";
    }
    return "?";
}

LTermPtr make_var(const std::string& name) {
    auto t = std::make_shared<LTerm>();
    t->kind = LTerm::Var;
    t->name = name;
    return t;
}

LTermPtr make_const(const std::string& name, Cat cat) {
    auto t = std::make_shared<LTerm>();
    t->kind = LTerm::Const;
    t->name = name;
    t->cat = cat;
    return t;
}

LTermPtr make_lam(const std::string& param, Cat cat, LTermPtr body) {
    auto t = std::make_shared<LTerm>();
    t->kind = LTerm::Lam;
    t->name = param;
    t->cat = cat;
    t->body = std::move(body);
    return t;
}

LTermPtr make_app(LTermPtr fn, LTermPtr arg) {
    auto t = std::make_shared<LTerm>();
    t->kind = LTerm::App;
    t->fn = std::move(fn);
    t->arg = std::move(arg);
    return t;
}

LTermPtr make_interval(std::vector<LTermPtr> fields) {
    auto t = std::make_shared<LTerm>();
    t->kind = LTerm::Interval;
    t->fields = std::move(fields);
    return t;
}

bool term_equal(const LTerm& a, const LTerm& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case LTerm::Var: return a.name == b.name;
        case LTerm::Const: return a.name == b.name && a.cat == b.cat;
        case LTerm::Lam:
            return a.name == b.name && a.cat == b.cat && term_equal(*a.body, *b.body);
        case LTerm::App: return term_equal(*a.fn, *b.fn) && term_equal(*a.arg, *b.arg);
        case LTerm::Interval:
            if (a.fields.size() != b.fields.size()) return false;
            for (size_t i = 0; i < a.fields.size(); ++i)
                if (!term_equal(*a.fields[i], *b.fields[i])) return false;
            return true;
    }
    return false;
}

Cat category_of_spelling(const std::string& s) {
    if (s == "e" || s == "h") return Cat::CondOfReality;
    if (s == "<|" || s == "@=" || s == "|>") return Cat::TempSituator;
    static const char* meta[] = {"~",  "b1", "b2", "g1", "g2", "d1", "d2",
                                 "k1", "k2", "t1", "t2", "t3", "t4"};
    for (const char* m : meta)
        if (s == m) return Cat::MetaSymbol;
    if (!s.empty() && std::all_of(s.begin(), s.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return Cat::Index;
    return Cat::Object;
}

namespace {

struct TermLexer {
    explicit TermLexer(const std::string& text) : text(text) { next(); }

    const std::string& text;
    size_t pos = 0;
    std::string tok;  // empty = end

    void next() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok.clear();
        if (pos >= text.size()) return;
        static const char* puncts[] = {"<|", "@=", "|>", "\\", ".", ":", "(", ")", "[", "]", "|", "~"};
        for (const char* p : puncts) {
            size_t n = std::strlen(p);
            if (text.compare(pos, n, p) == 0) {
                tok = p;
                pos += n;
                return;
            }
        }
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw Error("SYNTAX_ERROR", "stray character in term: " + text.substr(pos, 1));
        tok = text.substr(start, pos - start);
    }

    bool eat(const std::string& t) {
        if (tok != t) return false;
        next();
        return true;
    }

    void expect(const std::string& t) {
        if (!eat(t)) throw Error("SYNTAX_ERROR", "expected '" + t + "' in term, got '" + tok + "'");
    }
};

Cat parse_cat_name(TermLexer& lx) {
    std::string n = lx.tok;
    lx.next();
    if (n == "O") return Cat::Object;
    if (n == "PO") return Cat::Pattern;
    if (n == "CR") return Cat::CondOfReality;
    if (n == "TS") return Cat::TempSituator;
    if (n == "MS") return Cat::MetaSymbol;
    if (n == "IX") return Cat::Index;
    throw Error("SYNTAX_ERROR", "unknown category annotation '" + n + "'");
}

LTermPtr parse_term_rec(TermLexer& lx, std::vector<std::string>& bound);

LTermPtr parse_primary(TermLexer& lx, std::vector<std::string>& bound) {
    if (lx.eat("(")) {
        LTermPtr t = parse_term_rec(lx, bound);
        while (lx.tok != ")" && !lx.tok.empty()) t = make_app(t, parse_term_rec(lx, bound));
        lx.expect(")");
        return t;
    }
    if (lx.eat("[")) {
        std::vector<LTermPtr> fields;
        fields.push_back(parse_term_rec(lx, bound));
        while (lx.eat("|")) fields.push_back(parse_term_rec(lx, bound));
        lx.expect("]");
        return make_interval(std::move(fields));
    }
    if (lx.tok.empty()) throw Error("SYNTAX_ERROR", "unexpected end of term");
    if (lx.tok == "pat") {
        lx.next();
        std::string name = lx.tok;
        lx.next();
        return make_const(name, Cat::Pattern);
    }
    std::string s = lx.tok;
    lx.next();
    if (std::find(bound.begin(), bound.end(), s) != bound.end()) return make_var(s);
    return make_const(s, category_of_spelling(s));
}

LTermPtr parse_term_rec(TermLexer& lx, std::vector<std::string>& bound) {
    if (lx.eat("\\")) {
        std::string param = lx.tok;
        lx.next();
        lx.expect(":");
        Cat cat = parse_cat_name(lx);
        lx.expect(".");
        bound.push_back(param);
        LTermPtr body = parse_term_rec(lx, bound);
        bound.pop_back();
        return make_lam(param, cat, std::move(body));
    }
    return parse_primary(lx, bound);
}

void print_rec(std::ostream& os, const LTerm& t) {
    switch (t.kind) {
        case LTerm::Var: os << t.name; break;
        case LTerm::Const:
            if (t.cat == Cat::Pattern) os << "pat ";
            os << t.name;
            break;
        case LTerm::Lam:
            os << "\\" << t.name << ":" << to_string(t.cat) << ". ";
            print_rec(os, *t.body);
            break;
        case LTerm::App: {
            // Flatten nested applications into one n-ary group.
            std::vector<const LTerm*> args;
            const LTerm* head = &t;
            while (head->kind == LTerm::App) {
                args.push_back(head->arg.get());
                head = head->fn.get();
            }
            os << "(";
            if (head->kind == LTerm::Lam || head->kind == LTerm::App) {
                os << "(";
                print_rec(os, *head);
                os << ")";
            } else {
                print_rec(os, *head);
            }
            for (auto it = args.rbegin(); it != args.rend(); ++it) {
                os << " ";
                if ((*it)->kind == LTerm::Lam) {
                    os << "(";
                    print_rec(os, **it);
                    os << ")";
                } else {
                    print_rec(os, **it);
                }
            }
            os << ")";
            break;
        }
        case LTerm::Interval:
            os << "[";
            for (size_t i = 0; i < t.fields.size(); ++i) {
                if (i) os << "|";
                print_rec(os, *t.fields[i]);
            }
            os << "]";
            break;
    }
}

void collect_free(const LTerm& t, std::vector<std::string>& bound, std::vector<std::string>& out) {
    switch (t.kind) {
        case LTerm::Var:
            if (std::find(bound.begin(), bound.end(), t.name) == bound.end() &&
                std::find(out.begin(), out.end(), t.name) == out.end())
                out.push_back(t.name);
            break;
        case LTerm::Const: break;
        case LTerm::Lam:
            bound.push_back(t.name);
            collect_free(*t.body, bound, out);
            bound.pop_back();
            break;
        case LTerm::App:
            collect_free(*t.fn, bound, out);
            collect_free(*t.arg, bound, out);
            break;
        case LTerm::Interval:
            for (const auto& f : t.fields) collect_free(*f, bound, out);
            break;
    }
}

LTermPtr substitute(const LTermPtr& t, const std::string& var, const LTermPtr& value, int& fresh) {
    switch (t->kind) {
        case LTerm::Var: return t->name == var ? value : t;
        case LTerm::Const: return t;
        case LTerm::Lam: {
            if (t->name == var) return t;  // shadowed
            std::vector<std::string> value_free = free_vars(*value);
            if (std::find(value_free.begin(), value_free.end(), t->name) != value_free.end()) {
                // Capture: rename the binder first.
                std::string renamed = t->name + "$" + std::to_string(fresh++);
                LTermPtr new_body = substitute(t->body, t->name, make_var(renamed), fresh);
                new_body = substitute(new_body, var, value, fresh);
                return make_lam(renamed, t->cat, std::move(new_body));
            }
            return make_lam(t->name, t->cat, substitute(t->body, var, value, fresh));
        }
        case LTerm::App:
            return make_app(substitute(t->fn, var, value, fresh),
                            substitute(t->arg, var, value, fresh));
        case LTerm::Interval: {
            std::vector<LTermPtr> fields;
            fields.reserve(t->fields.size());
            for (const auto& f : t->fields) fields.push_back(substitute(f, var, value, fresh));
            return make_interval(std::move(fields));
        }
    }
    return t;
}

// Category of a term as an argument, when determinable.
Cat argument_category(const LTerm& t) {
    switch (t.kind) {
        case LTerm::Const: return t.cat;
        case LTerm::Interval: return Cat::IntervalAtom;
        case LTerm::Lam: return Cat::Register;
        default: return Cat::Register;  // Var/App never appear as typed arguments here
    }
}

void check_application(const LTerm& lam, const LTerm& arg) {
    Cat got = argument_category(arg);
    if (got == lam.cat) return;
    // Numeric 0/1 double as the Sigma1 symbols.
    if (lam.cat == Cat::MetaSymbol && arg.kind == LTerm::Const &&
        (arg.name == "0" || arg.name == "1"))
        return;
    throw Error("TYPE_MISMATCH", "applying \\" + lam.name + ":" + to_string(lam.cat) +
                                     " to argument '" + print_term(arg) + "' of category " +
                                     to_string(got));
}

int count_redexes(const LTerm& t) {
    switch (t.kind) {
        case LTerm::Var:
        case LTerm::Const: return 0;
        case LTerm::Lam: return count_redexes(*t.body);
        case LTerm::App:
            return (t.fn->kind == LTerm::Lam ? 1 : 0) + count_redexes(*t.fn) +
                   count_redexes(*t.arg);
        case LTerm::Interval: {
            int n = 0;
            for (const auto& f : t.fields) n += count_redexes(*f);
            return n;
        }
    }
    return 0;
}

// Contracts the which-th redex in leftmost-outermost traversal order.
LTermPtr contract(const LTermPtr& t, int& which, int& fresh) {
    switch (t->kind) {
        case LTerm::Var:
        case LTerm::Const: return t;
        case LTerm::Lam: {
            LTermPtr body = contract(t->body, which, fresh);
            return body == t->body ? t : make_lam(t->name, t->cat, std::move(body));
        }
        case LTerm::App: {
            if (t->fn->kind == LTerm::Lam) {
                if (which == 0) {
                    which = -1;
                    check_application(*t->fn, *t->arg);
                    return substitute(t->fn->body, t->fn->name, t->arg, fresh);
                }
                --which;
            }
            LTermPtr fn = contract(t->fn, which, fresh);
            if (fn != t->fn) return make_app(std::move(fn), t->arg);
            if (which < 0) return t;
            LTermPtr arg = contract(t->arg, which, fresh);
            return arg == t->arg ? t : make_app(t->fn, std::move(arg));
        }
        case LTerm::Interval: {
            std::vector<LTermPtr> fields = t->fields;
            bool changed = false;
            for (auto& f : fields) {
                if (which < 0) break;
                LTermPtr nf = contract(f, which, fresh);
                if (nf != f) {
                    f = std::move(nf);
                    changed = true;
                }
            }
            return changed ? make_interval(std::move(fields)) : t;
        }
    }
    return t;
}

}  // namespace

LTermPtr parse_term(const std::string& text) {
    TermLexer lx(text);
    std::vector<std::string> bound;
    LTermPtr t = parse_term_rec(lx, bound);
    if (!lx.tok.empty()) throw Error("SYNTAX_ERROR", "trailing input after term: '" + lx.tok + "'");
    return t;
}

std::string print_term(const LTerm& t) {
    std::ostringstream os;
    print_rec(os, t);
    return os.str();
}

bool is_normal(const LTerm& t) { return count_redexes(t) == 0; }

bool is_closed(const LTerm& t) { return free_vars(t).empty(); }

std::vector<std::string> free_vars(const LTerm& t) {
    std::vector<std::string> bound, out;
    collect_free(t, bound, out);
    return out;
}

LTermPtr beta_reduce(LTermPtr t) {
    int fresh = 0;
    while (true) {
        int which = 0;
        LTermPtr next = contract(t, which, fresh);
        if (which >= 0) return t;  // no redex found
        t = std::move(next);
    }
}

LTermPtr beta_reduce_random(LTermPtr t, std::mt19937& rng) {
    int fresh = 0;
    while (true) {
        int n = count_redexes(*t);
        if (n == 0) return t;
        int which = std::uniform_int_distribution<int>(0, n - 1)(rng);
        t = contract(t, which, fresh);
    }
}

}  // namespace mmppf

#include "mmppf/rgtc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace mmppf {

bool RgtcGrammar::is_nonterminal(const std::string& s) const {
    return std::any_of(rules.begin(), rules.end(),
                       [&](const RgtcRule& r) { return r.lhs == s; });
}

bool RgtcGrammar::is_input_symbol(const std::string& s) const {
    return std::find(input_symbols.begin(), input_symbols.end(), s) != input_symbols.end();
}

bool RgtcGrammar::is_output_symbol(const std::string& s) const {
    return std::find(output_symbols.begin(), output_symbols.end(), s) != output_symbols.end();
}

namespace {

[[noreturn]] void gfail(const std::string& code, int line, const std::string& what) {
    throw Error(code, "grammar line " + std::to_string(line) + ": " + what);
}

struct LineScanner {
    const std::string& s;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string quoted() {
        skip_ws();
        if (pos >= s.size() || s[pos] != '"') gfail("PARSE_ERROR", line, "expected quoted symbol");
        size_t end = s.find('"', pos + 1);
        if (end == std::string::npos) gfail("PARSE_ERROR", line, "unterminated quote");
        std::string out = s.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        return out;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) gfail("PARSE_ERROR", line, "expected identifier");
        return s.substr(start, pos - start);
    }

    // A λ-term starting at the current position: balanced ()/[] groups, or
    // a bare `\`-lambda running to the next top-level , or ).
    std::string term_text() {
        skip_ws();
        size_t start = pos;
        if (s[pos] == '(' || s[pos] == '[') {
            int depth = 0;
            while (pos < s.size()) {
                char c = s[pos];
                if (c == '(' || c == '[') ++depth;
                if (c == ')' || c == ']') --depth;
                ++pos;
                if (depth == 0) break;
            }
            if (depth_error(start)) gfail("PARSE_ERROR", line, "unbalanced term");
        } else {  // backslash lambda
            int depth = 0;
            while (pos < s.size()) {
                char c = s[pos];
                if (c == '(' || c == '[') ++depth;
                if (c == ')' || c == ']') {
                    if (depth == 0) break;
                    --depth;
                }
                if (c == ',' && depth == 0) break;
                ++pos;
            }
        }
        return s.substr(start, pos - start);
    }

    bool depth_error(size_t start) {
        int depth = 0;
        for (size_t i = start; i < pos; ++i) {
            if (s[i] == '(' || s[i] == '[') ++depth;
            if (s[i] == ')' || s[i] == ']') --depth;
        }
        return depth != 0;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            gfail("PARSE_ERROR", line, std::string("expected '") + c + "'");
        ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

RgtcRule parse_rule_line(const std::string& text, int line_no) {
    LineScanner sc{text, 0, line_no};
    RgtcRule rule;
    rule.lhs = sc.ident();
    sc.expect('-');
    sc.expect('>');
    sc.expect('(');

    // alpha: quoted terminals and bare nonterminals, up to the first ','.
    while (sc.peek() != ',' && sc.peek() != ')') {
        if (sc.peek() == '"')
            rule.alpha.push_back({true, sc.quoted()});
        else
            rule.alpha.push_back({false, sc.ident()});
    }
    sc.expect(',');

    // gamma: quoted literals, bare nonterminals, λ-terms.
    while (sc.peek() != ',' && sc.peek() != ')') {
        char c = sc.peek();
        RgtcRule::OutItem item;
        if (c == '"') {
            item.kind = RgtcRule::OutItem::Literal;
            item.text = sc.quoted();
        } else if (c == '(' || c == '[' || c == '\\') {
            item.kind = RgtcRule::OutItem::Term;
            item.term = parse_term(sc.term_text());
        } else {
            item.kind = RgtcRule::OutItem::NonTerminal;
            item.text = sc.ident();
        }
        rule.gamma.push_back(std::move(item));
    }

    if (sc.eat(',')) {
        if (sc.peek() != '{') gfail("NOT_SIMPLE", line_no, "extra rule section is not an assignment set");
        sc.expect('{');
        while (sc.peek() != '}') {
            std::string var = sc.ident();
            sc.expect(':');
            sc.expect('=');
            std::string value = sc.peek() == '"' ? sc.quoted() : sc.ident();
            rule.assignments.emplace_back(var, value);
            if (!sc.eat(';')) break;
        }
        sc.expect('}');
        if (sc.eat(','))
            gfail("NOT_SIMPLE", line_no, "a fourth rule section (permutation) is not allowed");
    }
    sc.expect(')');
    if (!sc.done()) gfail("PARSE_ERROR", line_no, "trailing text after rule");
    return rule;
}

}  // namespace

namespace {

// The term parser cannot tell assignment variables from object constants;
// any name assigned somewhere in the grammar is a variable everywhere.
LTermPtr consts_to_vars(const LTermPtr& t, const std::set<std::string>& vars) {
    switch (t->kind) {
        case LTerm::Const:
            return vars.count(t->name) ? make_var(t->name) : t;
        case LTerm::Lam:
            return make_lam(t->name, t->cat, consts_to_vars(t->body, vars));
        case LTerm::App:
            return make_app(consts_to_vars(t->fn, vars), consts_to_vars(t->arg, vars));
        case LTerm::Interval: {
            std::vector<LTermPtr> fields;
            for (const auto& f : t->fields) fields.push_back(consts_to_vars(f, vars));
            return make_interval(std::move(fields));
        }
        default: return t;
    }
}

}  // namespace

RgtcGrammar parse_grammar(const std::string& source) {
    RgtcGrammar g;
    std::istringstream in(source);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        if (line.rfind("%start", 0) == 0) {
            LineScanner sc{line, 6, line_no};
            g.start = sc.ident();
        } else if (line.rfind("%input", 0) == 0) {
            LineScanner sc{line, 6, line_no};
            while (!sc.done()) g.input_symbols.push_back(sc.quoted());
        } else if (line.rfind("%output", 0) == 0) {
            LineScanner sc{line, 7, line_no};
            while (!sc.done()) g.output_symbols.push_back(sc.quoted());
        } else {
            g.rules.push_back(parse_rule_line(line, line_no));
        }
    }

    {
        std::set<std::string> vars;
        for (const RgtcRule& r : g.rules)
            for (const auto& [var, value] : r.assignments) vars.insert(var);
        if (!vars.empty())
            for (RgtcRule& r : g.rules)
                for (auto& o : r.gamma)
                    if (o.kind == RgtcRule::OutItem::Term) o.term = consts_to_vars(o.term, vars);
    }

    if (g.start.empty()) throw Error("PARSE_ERROR", "grammar: missing %start declaration");
    if (!g.is_nonterminal(g.start))
        throw Error("UNDECLARED_SYMBOL", "start symbol '" + g.start + "' has no rule");
    for (const RgtcRule& r : g.rules) {
        int alpha_nts = 0, gamma_nts = 0;
        std::string alpha_nt, gamma_nt;
        for (const auto& t : r.alpha) {
            if (t.terminal) {
                if (!g.is_input_symbol(t.text))
                    throw Error("UNDECLARED_SYMBOL",
                                "input symbol '" + t.text + "' is not in %input");
            } else {
                if (!g.is_nonterminal(t.text))
                    throw Error("UNDECLARED_SYMBOL", "'" + t.text + "' has no rule");
                ++alpha_nts;
                alpha_nt = t.text;
            }
        }
        for (const auto& o : r.gamma) {
            if (o.kind == RgtcRule::OutItem::Literal) {
                if (!g.is_output_symbol(o.text))
                    throw Error("UNDECLARED_SYMBOL",
                                "output symbol '" + o.text + "' is not in %output");
            } else if (o.kind == RgtcRule::OutItem::NonTerminal) {
                if (!g.is_nonterminal(o.text))
                    throw Error("UNDECLARED_SYMBOL", "'" + o.text + "' has no rule");
                ++gamma_nts;
                gamma_nt = o.text;
            }
        }
        if (alpha_nts > 1 || gamma_nts > 1)
            throw Error("TOO_MANY_NONTERMINALS",
                        "rule for " + r.lhs + " carries more than one nonterminal");
        if (alpha_nts != gamma_nts || (alpha_nts == 1 && alpha_nt != gamma_nt))
            throw Error("NOT_SIMPLE", "rule for " + r.lhs +
                                          ": input and output sides disagree on the nonterminal");
    }
    return g;
}

std::string print_grammar(const RgtcGrammar& g) {
    std::ostringstream os;
    os << "%start " << g.start << "\n";
    os << "%input";
    for (const std::string& s : g.input_symbols) os << " \"" << s << "\"";
    os << "\n%output";
    for (const std::string& s : g.output_symbols) os << " \"" << s << "\"";
    os << "\n";
    for (const RgtcRule& r : g.rules) {
        os << r.lhs << " -> (";
        for (const auto& t : r.alpha)
            os << " " << (t.terminal ? "\"" + t.text + "\"" : t.text);
        os << " ,";
        for (const auto& o : r.gamma) {
            os << " ";
            if (o.kind == RgtcRule::OutItem::Literal)
                os << "\"" << o.text << "\"";
            else if (o.kind == RgtcRule::OutItem::NonTerminal)
                os << o.text;
            else
                os << print_term(*o.term);
        }
        os << " , {";
        for (size_t i = 0; i < r.assignments.size(); ++i) {
            if (i) os << " ;";
            os << " " << r.assignments[i].first << " := " << r.assignments[i].second;
        }
        if (!r.assignments.empty()) os << " ";
        os << "} )\n";
    }
    return os.str();
}

namespace {

struct Expander {
    const RgtcGrammar& g;
    const std::vector<std::string>& input;
    size_t pos = 0;
    std::vector<int> derivation;
    std::vector<std::pair<std::string, std::string>> assignments;

    // Leading terminals of a rule, before the nonterminal (if any).
    static std::vector<const std::string*> terminal_prefix(const RgtcRule& r) {
        std::vector<const std::string*> out;
        for (const auto& t : r.alpha) {
            if (!t.terminal) break;
            out.push_back(&t.text);
        }
        return out;
    }

    bool prefix_matches(const std::vector<const std::string*>& prefix) const {
        if (pos + prefix.size() > input.size()) return false;
        for (size_t i = 0; i < prefix.size(); ++i)
            if (input[pos + i] != *prefix[i]) return false;
        return true;
    }

    std::vector<OutPiece> expand(const std::string& nt) {
        int best = -1;
        size_t best_len = 0;
        bool tie = false;
        for (size_t i = 0; i < g.rules.size(); ++i) {
            if (g.rules[i].lhs != nt) continue;
            auto prefix = terminal_prefix(g.rules[i]);
            if (!prefix_matches(prefix)) continue;
            if (best < 0 || prefix.size() > best_len) {
                best = static_cast<int>(i);
                best_len = prefix.size();
                tie = false;
            } else if (prefix.size() == best_len) {
                tie = true;
            }
        }
        if (best < 0)
            throw Error("NO_DERIVATION", "no rule of " + nt + " matches at token " +
                                             std::to_string(pos + 1));
        if (tie)
            throw Error("AMBIGUOUS", "two rules of " + nt +
                                         " match equally long prefixes at token " +
                                         std::to_string(pos + 1));

        const RgtcRule& rule = g.rules[best];
        derivation.push_back(best);
        for (const auto& [var, value] : rule.assignments) assignments.emplace_back(var, value);

        std::vector<OutPiece> sub;
        for (const auto& t : rule.alpha) {
            if (t.terminal) {
                if (pos >= input.size() || input[pos] != t.text)
                    throw Error("NO_DERIVATION", "expected token '" + t.text + "' at position " +
                                                     std::to_string(pos + 1));
                ++pos;
            } else {
                sub = expand(t.text);
            }
        }

        std::vector<OutPiece> out;
        for (const auto& o : rule.gamma) {
            if (o.kind == RgtcRule::OutItem::Literal) {
                out.push_back({true, o.text, nullptr});
            } else if (o.kind == RgtcRule::OutItem::Term) {
                out.push_back({false, "", o.term});
            } else {
                for (auto& p : sub) out.push_back(std::move(p));
            }
        }
        return out;
    }
};

}  // namespace

TranslationRun translate(const RgtcGrammar& g, const std::vector<std::string>& input) {
    Expander ex{g, input, 0, {}, {}};
    TranslationRun run;
    run.input = input;
    run.raw = ex.expand(g.start);
    if (ex.pos != input.size())
        throw Error("NO_DERIVATION",
                    "trailing input from token " + std::to_string(ex.pos + 1));
    run.derivation = std::move(ex.derivation);

    std::map<std::string, std::string> binding;
    for (const auto& [var, value] : ex.assignments)
        if (!binding.emplace(var, value).second)
            throw Error("REBOUND_VARIABLE", "variable '" + var + "' assigned twice in one run");

    for (const OutPiece& piece : run.raw) {
        if (piece.literal) {
            run.output.push_back(piece);
            continue;
        }
        LTermPtr term = piece.term;
        for (const std::string& var : free_vars(*term)) {
            auto it = binding.find(var);
            if (it == binding.end())
                throw Error("UNBOUND_VARIABLE", "free variable '" + var + "' never assigned");
            // M {x := c} realized as (\x. M) c.
            term = make_app(make_lam(var, category_of_spelling(it->second), term),
                            make_const(it->second, category_of_spelling(it->second)));
        }
        run.output.push_back({false, "", beta_reduce(term)});
    }
    return run;
}

namespace {

MetaSym meta_from_spelling(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(MetaSym::T4); ++i)
        if (spell(static_cast<MetaSym>(i)) == s) return static_cast<MetaSym>(i);
    throw Error("TRANSLATION_ERROR", "'" + s + "' is not a metainformation symbol");
}

LTermPtr cond_const(Condition c) {
    return make_const(c == Condition::Epsilon ? "e" : "h", Cat::CondOfReality);
}

std::string situator_mark(Situator s) {
    switch (s) {
        case Situator::Past: return "<|";
        case Situator::Present: return "@=";
        case Situator::Future: return "|>";
    }
    return "?";
}

// The register-of-states redex for one interval atom: a λ-term over the
// situator and object, applied to this atom's own situator and object.
LTermPtr interval_redex(const Signature& sig, const PlStarAtomic& atom,
                        const std::vector<LTermPtr>& tail_fields, int object) {
    std::vector<LTermPtr> fields;
    fields.push_back(cond_const(atom.cond));
    fields.push_back(make_var("tp"));
    fields.push_back(make_var("ob"));
    for (const LTermPtr& f : tail_fields) fields.push_back(f);
    LTermPtr lam = make_lam("tp", Cat::TempSituator,
                            make_lam("ob", Cat::Object, make_interval(std::move(fields))));
    LTermPtr applied = make_app(lam, make_const(situator_mark(atom.sit), Cat::TempSituator));
    return make_app(applied, make_const(sig.objects[object], Cat::Object));
}

std::vector<LTermPtr> block_terms(const Signature& sig, const PlStarBlock& block) {
    std::vector<LTermPtr> out;
    for (const PlStarAtomic& atom : block.atoms) {
        if (const MetaIBody* b = std::get_if<MetaIBody>(&atom.body)) {
            for (size_t p = 0; p < b->symbols.size(); ++p)
                out.push_back(interval_redex(
                    sig, atom,
                    {make_const(std::to_string(p), Cat::Index),
                     make_const(spell(b->symbols[p]), Cat::MetaSymbol)},
                    b->object));
        } else if (const MetaComponentBody* b2 = std::get_if<MetaComponentBody>(&atom.body)) {
            out.push_back(interval_redex(
                sig, atom,
                {make_const(std::to_string(b2->property), Cat::Index),
                 make_const(std::to_string(b2->dimension), Cat::Index),
                 make_const(spell(b2->symbol), Cat::MetaSymbol)},
                b2->object));
        } else {
            const MetaRelationalBody& b3 = std::get<MetaRelationalBody>(atom.body);
            out.push_back(interval_redex(
                sig, atom,
                {make_const(sig.objects[b3.target], Cat::Object),
                 make_const(spell(b3.symbol), Cat::MetaSymbol)},
                b3.subject));
        }
    }
    return out;
}

std::vector<std::string> block_tokens(const Signature& sig, const PlStarBlock& block) {
    std::vector<std::string> out;
    for (size_t i = 0; i < block.atoms.size(); ++i) {
        if (i) out.push_back("^");
        out.push_back(print_atom(sig, block.atoms[i]));
    }
    return out;
}

void append_block_alpha(RgtcRule& rule, const Signature& sig, const PlStarBlock& block) {
    for (const std::string& tok : block_tokens(sig, block)) rule.alpha.push_back({true, tok});
}

void append_block_gamma(RgtcRule& rule, const Signature& sig, const PlStarBlock& block) {
    std::vector<LTermPtr> terms = block_terms(sig, block);
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) rule.gamma.push_back({RgtcRule::OutItem::Literal, "^", nullptr});
        rule.gamma.push_back({RgtcRule::OutItem::Term, "", terms[i]});
    }
}

ClAtomic term_to_cl_atomic(const Signature& sig, const LTerm& t) {
    if (t.kind != LTerm::Interval || t.fields.size() < 5 || t.fields.size() > 6)
        throw Error("TRANSLATION_ERROR", "output term is not an interval atom: " + print_term(t));
    std::vector<const LTerm*> f;
    for (const auto& fp : t.fields) {
        if (fp->kind != LTerm::Const)
            throw Error("TRANSLATION_ERROR", "interval atom field is not normal: " + print_term(t));
        f.push_back(fp.get());
    }
    ClAtomic a;
    if (f[0]->name == "e")
        a.cond = Condition::Epsilon;
    else if (f[0]->name == "h")
        a.cond = Condition::Hypothetical;
    else
        throw Error("TRANSLATION_ERROR", "bad condition field in " + print_term(t));
    if (f[1]->name == "<|")
        a.sit = Situator::Past;
    else if (f[1]->name == "@=")
        a.sit = Situator::Present;
    else if (f[1]->name == "|>")
        a.sit = Situator::Future;
    else
        throw Error("TRANSLATION_ERROR", "bad situator field in " + print_term(t));
    if (f[2]->cat == Cat::Pattern) {
        a.obj.pattern = f[2]->name;
    } else {
        a.obj.object = sig.object_index(f[2]->name);
        if (a.obj.object < 0)
            throw Error("TRANSLATION_ERROR", "unknown object field in " + print_term(t));
    }
    if (t.fields.size() == 6) {
        ClCompMeta b;
        b.property = std::stoi(f[3]->name);
        b.dimension = std::stoi(f[4]->name);
        b.symbol = meta_from_spelling(f[5]->name);
        a.body = b;
    } else if (f[3]->cat == Cat::Index) {
        ClPropMeta b;
        b.property = std::stoi(f[3]->name);
        b.symbol = meta_from_spelling(f[4]->name);
        a.body = b;
    } else {
        ClRelMeta b;
        b.target = sig.object_index(f[3]->name);
        if (b.target < 0)
            throw Error("TRANSLATION_ERROR", "unknown target field in " + print_term(t));
        b.symbol = meta_from_spelling(f[4]->name);
        a.body = b;
    }
    return a;
}

}  // namespace

RgtcGrammar make_interval_collapse_grammar(const Signature& sig,
                                           const std::vector<PlStarBlock>& vocabulary) {
    // Distinct blocks in canonical order.
    std::vector<PlStarBlock> blocks = vocabulary;
    for (PlStarBlock& b : blocks) std::sort(b.atoms.begin(), b.atoms.end());
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    if (blocks.empty()) throw Error("TRANSLATION_ERROR", "empty grammar vocabulary");

    RgtcGrammar g;
    g.start = "S";
    std::set<std::string> inputs = {"^", "->>", "~>"};
    for (const PlStarBlock& b : blocks)
        for (const std::string& tok : block_tokens(sig, b)) inputs.insert(tok);
    g.input_symbols.assign(inputs.begin(), inputs.end());
    g.output_symbols = {"->>", "^", "~>"};

    auto nt = [](size_t i) { return "R" + std::to_string(i + 1); };

    for (size_t i = 0; i < blocks.size(); ++i) {
        RgtcRule r;
        r.lhs = "S";
        append_block_alpha(r, sig, blocks[i]);
        r.alpha.push_back({false, nt(i)});
        append_block_gamma(r, sig, blocks[i]);
        r.gamma.push_back({RgtcRule::OutItem::NonTerminal, nt(i), nullptr});
        g.rules.push_back(std::move(r));
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
        {
            // Absorb a repeat of the same block: no output.
            RgtcRule r;
            r.lhs = nt(i);
            r.alpha.push_back({true, "->>"});
            append_block_alpha(r, sig, blocks[i]);
            r.alpha.push_back({false, nt(i)});
            r.gamma.push_back({RgtcRule::OutItem::NonTerminal, nt(i), nullptr});
            g.rules.push_back(std::move(r));
        }
        for (size_t j = 0; j < blocks.size(); ++j) {
            if (j == i) continue;
            RgtcRule r;
            r.lhs = nt(i);
            r.alpha.push_back({true, "->>"});
            append_block_alpha(r, sig, blocks[j]);
            r.alpha.push_back({false, nt(j)});
            r.gamma.push_back({RgtcRule::OutItem::Literal, "->>", nullptr});
            append_block_gamma(r, sig, blocks[j]);
            r.gamma.push_back({RgtcRule::OutItem::NonTerminal, nt(j), nullptr});
            g.rules.push_back(std::move(r));
        }
        for (size_t j = 0; j < blocks.size(); ++j) {
            RgtcRule r;
            r.lhs = nt(i);
            r.alpha.push_back({true, "~>"});
            append_block_alpha(r, sig, blocks[j]);
            r.alpha.push_back({false, nt(j)});
            r.gamma.push_back({RgtcRule::OutItem::Literal, "~>", nullptr});
            append_block_gamma(r, sig, blocks[j]);
            r.gamma.push_back({RgtcRule::OutItem::NonTerminal, nt(j), nullptr});
            g.rules.push_back(std::move(r));
        }
        g.rules.push_back({nt(i), {}, {}, {}});
    }
    return g;
}

RgtcGrammar default_tr2_grammar(const Signature& sig, const PlStarFormula& f) {
    std::vector<PlStarBlock> vocab;
    for (const PlStarChain& chain : f.chains)
        for (const PlStarBlock& b : chain.blocks) vocab.push_back(b);
    return make_interval_collapse_grammar(sig, vocab);
}

std::vector<std::string> tr2_tokens(const Signature& sig, const PlStarChain& chain) {
    std::vector<std::string> out;
    for (size_t b = 0; b < chain.blocks.size(); ++b) {
        if (b) out.push_back(chain.joins[b - 1] == Join::Next ? "->>" : "~>");
        PlStarBlock block = chain.blocks[b];
        std::sort(block.atoms.begin(), block.atoms.end());
        std::vector<std::string> toks = block_tokens(sig, block);
        out.insert(out.end(), toks.begin(), toks.end());
    }
    return out;
}

ClFormula translate_tr2(const Signature& sig, const PlStarFormula& f, const RgtcGrammar& g) {
    ClFormula out;
    for (const PlStarChain& chain : f.chains) {
        TranslationRun run = translate(g, tr2_tokens(sig, chain));
        ClChain cl_chain;
        ClBlock block;
        for (const OutPiece& piece : run.output) {
            if (!piece.literal) {
                block.atoms.push_back(term_to_cl_atomic(sig, *piece.term));
            } else if (piece.text == "^") {
                continue;
            } else if (piece.text == "->>" || piece.text == "~>") {
                if (block.atoms.empty())
                    throw Error("TRANSLATION_ERROR", "junction with no preceding interval atom");
                cl_chain.blocks.push_back(std::move(block));
                block = ClBlock{};
                cl_chain.joins.push_back(piece.text == "->>" ? Join::Next : Join::Eventually);
            } else {
                throw Error("TRANSLATION_ERROR", "unexpected output symbol '" + piece.text + "'");
            }
        }
        if (block.atoms.empty())
            throw Error("TRANSLATION_ERROR", "translation produced an empty block");
        cl_chain.blocks.push_back(std::move(block));
        out.chains.push_back(std::move(cl_chain));
    }
    return out;
}

}  // namespace mmppf

#include "unitsep/group_spec.hpp"

#include <algorithm>
#include <cctype>

#include "unitsep/util.hpp"

namespace unitsep {

namespace {

struct Token {
    enum class Kind { Ident, Int, LParen, RParen, Comma, Caret, End };
    Kind kind;
    std::string text;
    long value = 0;
    std::size_t offset;
};

struct Lexer {
    std::string s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    Token next() {
        while (pos < s.size() && std::isspace(unsigned(s[pos]))) ++pos;
        std::size_t at = pos;
        if (pos >= s.size()) return {Token::Kind::End, "", 0, at};
        char c = s[pos];
        if (c == '(') return ++pos, Token{Token::Kind::LParen, "(", 0, at};
        if (c == ')') return ++pos, Token{Token::Kind::RParen, ")", 0, at};
        if (c == ',') return ++pos, Token{Token::Kind::Comma, ",", 0, at};
        if (c == '^') return ++pos, Token{Token::Kind::Caret, "^", 0, at};
        if (std::isdigit(unsigned(c)) || c == '-' || c == '+') {
            std::size_t start = pos;
            if (c == '-' || c == '+') ++pos;
            if (pos >= s.size() || !std::isdigit(unsigned(s[pos])))
                throw SyntaxError(at, "a number");
            while (pos < s.size() && std::isdigit(unsigned(s[pos]))) ++pos;
            return {Token::Kind::Int, s.substr(start, pos - start),
                    std::stol(s.substr(start, pos - start)), at};
        }
        if (std::isalpha(unsigned(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isalnum(unsigned(s[pos]))) ++pos;
            // a trailing +/- belongs to atom names like D16+ or DD+
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
            std::string t = s.substr(start, pos - start);
            for (auto& ch : t) ch = char(std::tolower(unsigned(ch)));
            return {Token::Kind::Ident, t, 0, at};
        }
        throw SyntaxError(at, "an atom, '(', or a number");
    }
};

struct Parser {
    Lexer lex;
    Token tok;

    explicit Parser(const std::string& text) : lex(text) { tok = lex.next(); }

    void advance() { tok = lex.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (tok.kind != k) throw SyntaxError(tok.offset, what);
        advance();
    }

    long expect_int() {
        if (tok.kind != Token::Kind::Int) throw SyntaxError(tok.offset, "a number");
        long v = tok.value;
        advance();
        return v;
    }

    GroupSpec parse() {
        GroupSpec s = parse_product();
        if (tok.kind != Token::Kind::End) throw SyntaxError(tok.offset, "end of input or 'x'");
        return s;
    }

    GroupSpec parse_product() {
        std::vector<GroupSpec> terms;
        terms.push_back(parse_term());
        while (tok.kind == Token::Kind::Ident && tok.text == "x") {
            advance();
            terms.push_back(parse_term());
        }
        if (terms.size() == 1) return std::move(terms[0]);
        GroupSpec s;
        s.kind = GroupSpec::Kind::Product;
        s.children = std::move(terms);
        return s;
    }

    GroupSpec parse_term() {
        if (tok.kind == Token::Kind::LParen) {
            advance();
            GroupSpec s = parse_product();
            expect(Token::Kind::RParen, "')'");
            return s;
        }
        if (tok.kind != Token::Kind::Ident || tok.text == "x")
            throw SyntaxError(tok.offset, "a group atom");
        std::string name = tok.text;
        std::size_t at = tok.offset;
        advance();
        if (name == "sdp") {
            expect(Token::Kind::LParen, "'('");
            GroupSpec s;
            s.kind = GroupSpec::Kind::Semidirect;
            s.sd_n = expect_int();
            expect(Token::Kind::Comma, "','");
            s.sd_m = expect_int();
            expect(Token::Kind::Comma, "','");
            s.sd_r = expect_int();
            expect(Token::Kind::RParen, "')'");
            return s;
        }
        if (name == "y") {
            expect(Token::Kind::LParen, "'('");
            GroupSpec s;
            s.kind = GroupSpec::Kind::CentralProduct;
            s.children.push_back(parse_product());
            expect(Token::Kind::Comma, "','");
            s.children.push_back(parse_product());
            expect(Token::Kind::RParen, "')'");
            return s;
        }
        if (name == "quo") {
            expect(Token::Kind::LParen, "'('");
            GroupSpec s;
            s.kind = GroupSpec::Kind::QuotientWord;
            s.children.push_back(parse_product());
            expect(Token::Kind::Comma, "','");
            while (tok.kind == Token::Kind::Ident) {
                std::string g = tok.text;
                advance();
                long e = 1;
                if (tok.kind == Token::Kind::Caret) {
                    advance();
                    e = expect_int();
                }
                s.word.push_back({g, e});
            }
            if (s.word.empty()) throw SyntaxError(tok.offset, "a word");
            expect(Token::Kind::RParen, "')'");
            return s;
        }
        GroupSpec s;
        s.kind = GroupSpec::Kind::Atom;
        s.atom = canonical_atom(name, at);
        return s;
    }

    // the canonical spelling is simply uppercase; unknown names are rejected
    // by resolve(), not by the parser
    static std::string canonical_atom(const std::string& name, std::size_t at) {
        (void)at;
        std::string out = name;
        for (auto& ch : out) ch = char(std::toupper(unsigned(ch)));
        return out;
    }
};

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

FiniteGroup resolve_atom(const std::string& atom) {
    char head = atom[0];
    if (atom == "DD") return todd_coxeter(presentation_DD());
    if (atom == "DD+") return todd_coxeter(presentation_DDplus());
    if (atom == "D8YQ8") {
        auto d8 = FiniteGroup::dihedral(8);
        auto q8 = FiniteGroup::dicyclic(8);
        return FiniteGroup::central_product(d8, center(d8).elements()[1], q8,
                                            center(q8).elements()[1]);
    }
    if (atom == "G18") return todd_coxeter(presentation_G18());
    bool signed_tail = atom.back() == '+' || atom.back() == '-';
    long n = std::stol(atom.substr(1, atom.size() - 1 - (signed_tail ? 1 : 0)));
    if (head == 'C') return FiniteGroup::cyclic(int(n));
    if (head == 'Q') return FiniteGroup::dicyclic(int(n));
    if (head == 'H') return todd_coxeter(presentation_H(int(n)));
    if (head == 'D') {
        if (!signed_tail) return FiniteGroup::dihedral(int(n));
        // D_{2^{k+2}}^± = <a>_{2^{k+1}} x| <b>_2 with a^b = a^{2^k ± 1}
        if (!is_power_of_two(n) || n < 16)
            throw BadParameter(atom + ": modified dihedral atoms need a 2-power order >= 16");
        long half = n / 2, quarter = n / 4;
        long r = atom.back() == '+' ? quarter + 1 : quarter - 1;
        return FiniteGroup::semidirect_cyclic(int(half), 2, int(r));
    }
    throw UnknownAtom(atom);
}

int unique_central_involution(const FiniteGroup& G) {
    auto Z = center(G);
    int found = -1;
    for (int z : Z.elements())
        if (G.order_of(z) == 2) {
            if (found >= 0)
                throw NotCentral(G.label() + ": central involution is not unique");
            found = z;
        }
    if (found < 0) throw NotCentral(G.label() + ": no central involution");
    return found;
}

} // namespace

GroupSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string print_spec(const GroupSpec& s) {
    switch (s.kind) {
        case GroupSpec::Kind::Atom:
            return s.atom;
        case GroupSpec::Kind::Product: {
            std::string out;
            for (std::size_t i = 0; i < s.children.size(); ++i) {
                if (i) out += " x ";
                bool paren = s.children[i].kind == GroupSpec::Kind::Product;
                out += paren ? "(" + print_spec(s.children[i]) + ")" : print_spec(s.children[i]);
            }
            return out;
        }
        case GroupSpec::Kind::Semidirect:
            return "sdp(" + std::to_string(s.sd_n) + "," + std::to_string(s.sd_m) + "," +
                   std::to_string(s.sd_r) + ")";
        case GroupSpec::Kind::CentralProduct:
            return "y(" + print_spec(s.children[0]) + "," + print_spec(s.children[1]) + ")";
        case GroupSpec::Kind::QuotientWord: {
            std::string w;
            for (std::size_t i = 0; i < s.word.size(); ++i) {
                if (i) w += " ";
                w += s.word[i].first;
                if (s.word[i].second != 1) w += "^" + std::to_string(s.word[i].second);
            }
            return "quo(" + print_spec(s.children[0]) + "," + w + ")";
        }
    }
    return "";
}

long spec_order(const GroupSpec& s) {
    switch (s.kind) {
        case GroupSpec::Kind::Atom: {
            if (s.atom == "DD") return 16;
            if (s.atom == "DD+") return 32;
            if (s.atom == "D8YQ8") return 32;
            if (s.atom == "G18") return 18;
            bool signed_tail = s.atom.back() == '+' || s.atom.back() == '-';
            long n = std::stol(s.atom.substr(1, s.atom.size() - 1 - (signed_tail ? 1 : 0)));
            if (s.atom[0] == 'H') return resolve_atom(s.atom).order();
            return n;
        }
        case GroupSpec::Kind::Product: {
            long n = 1;
            for (auto& c : s.children) n *= spec_order(c);
            return n;
        }
        case GroupSpec::Kind::Semidirect:
            return s.sd_n * s.sd_m;
        case GroupSpec::Kind::CentralProduct:
            return spec_order(s.children[0]) * spec_order(s.children[1]) / 2;
        case GroupSpec::Kind::QuotientWord:
            return resolve(s).order();
    }
    return 1;
}

FiniteGroup resolve(const GroupSpec& s) {
    switch (s.kind) {
        case GroupSpec::Kind::Atom: {
            auto G = resolve_atom(s.atom);
            G.set_label(s.atom);
            return G;
        }
        case GroupSpec::Kind::Product: {
            FiniteGroup G = resolve(s.children[0]);
            for (std::size_t i = 1; i < s.children.size(); ++i)
                G = FiniteGroup::direct_product(G, resolve(s.children[i]));
            G.set_label(print_spec(s));
            return G;
        }
        case GroupSpec::Kind::Semidirect: {
            auto G = FiniteGroup::semidirect_cyclic(int(s.sd_n), int(s.sd_m), int(s.sd_r));
            G.set_label(print_spec(s));
            return G;
        }
        case GroupSpec::Kind::CentralProduct: {
            auto A = resolve(s.children[0]);
            auto B = resolve(s.children[1]);
            auto G = FiniteGroup::central_product(A, unique_central_involution(A), B,
                                                  unique_central_involution(B));
            G.set_label(print_spec(s));
            return G;
        }
        case GroupSpec::Kind::QuotientWord: {
            auto G = resolve(s.children[0]);
            int w = 0;
            for (auto& [name, e] : s.word) {
                auto g = G.generator(name);
                if (!g) throw BadParameter("unknown generator '" + name + "' in quotient word");
                w = G.op(w, G.pow(*g, e));
            }
            auto Q = quotient(G, normal_closure(G, {w}));
            Q.group.set_label(print_spec(s));
            return std::move(Q.group);
        }
    }
    throw BadParameter("unreachable spec kind");
}

FiniteGroup resolve(const std::string& text) { return resolve(parse_spec(text)); }

Presentation presentation_DD() {
    Presentation p;
    p.gens = {"a", "b", "c"};
    p.relators = {
        parse_word(p, "c a c^-1 a^-1"), parse_word(p, "c b c^-1 b^-1"),
        parse_word(p, "a^2"),           parse_word(p, "b^2"),
        parse_word(p, "c^4"),           parse_word(p, "b a b^-1 a^-1 c^-2"),
    };
    return p;
}

Presentation presentation_DDplus() {
    Presentation p;
    p.gens = {"a", "b", "c"};
    p.relators = {
        parse_word(p, "c a c^-1 a^-1"), parse_word(p, "c b c^-1 b^-1"),
        parse_word(p, "a^4"),           parse_word(p, "b^2"),
        parse_word(p, "c^4"),           parse_word(p, "b a b^-1 a^-3 c^-1"),
    };
    return p;
}

Presentation presentation_H(int n) {
    if (n < 1) throw BadParameter("H<n> requires n >= 1");
    Presentation p;
    p.gens.push_back("x");
    for (int i = 1; i <= n; ++i) p.gens.push_back("y" + std::to_string(i));
    p.relators.push_back(parse_word(p, "x^4"));
    for (int i = 1; i <= n; ++i) {
        std::string yi = "y" + std::to_string(i);
        p.relators.push_back(parse_word(p, "x^2 " + yi + "^4"));
        // y_i^2 [x, y_i]
        p.relators.push_back(parse_word(p, yi + "^2 x^-1 " + yi + "^-1 x " + yi));
        for (int j = i + 1; j <= n; ++j) {
            std::string yj = "y" + std::to_string(j);
            p.relators.push_back(
                parse_word(p, yi + "^-1 " + yj + "^-1 " + yi + " " + yj));
        }
    }
    return p;
}

Presentation presentation_G18() {
    // (C3 x C3) x| C2 with the involution swapping the two C3 factors
    Presentation p;
    p.gens = {"a", "b", "x"};
    p.relators = {
        parse_word(p, "a^3"),
        parse_word(p, "b^3"),
        parse_word(p, "x^2"),
        parse_word(p, "a^-1 b^-1 a b"),
        parse_word(p, "x a x b^-1"),
    };
    return p;
}

} // namespace unitsep

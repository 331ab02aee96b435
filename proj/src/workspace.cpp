#include "realizability/workspace.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "realizability/combinators.hpp"
#include "realizability/errors.hpp"

namespace realizability {

namespace {

enum class Tok {
    AtomS, AtomK, Ident,
    KwLet, KwAssembly, KwPer, KwMap, KwElement, KwClass, KwTracker,
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Lambda, Dot, Semi, Comma, Colon, Equals, Arrow, FatArrow, Turnstile,
    End,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::AtomS: return "'S'";
        case Tok::AtomK: return "'K'";
        case Tok::Ident: return "identifier";
        case Tok::KwLet: return "'let'";
        case Tok::KwAssembly: return "'assembly'";
        case Tok::KwPer: return "'per'";
        case Tok::KwMap: return "'map'";
        case Tok::KwElement: return "'element'";
        case Tok::KwClass: return "'class'";
        case Tok::KwTracker: return "'tracker'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Lambda: return "'\\'";
        case Tok::Dot: return "'.'";
        case Tok::Semi: return "';'";
        case Tok::Comma: return "','";
        case Tok::Colon: return "':'";
        case Tok::Equals: return "'='";
        case Tok::Arrow: return "'->'";
        case Tok::FatArrow: return "'=>'";
        case Tok::Turnstile: return "'|-'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;  // Ident only
    std::size_t line;
    std::size_t col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    Token expect(Tok kind) {
        if (current_.kind != kind) {
            throw SyntaxError(current_.line, current_.col, tok_name(kind));
        }
        return take();
    }

private:
    void advance() {
        skip_blank();
        current_.line = line_;
        current_.col = col_;
        current_.text.clear();
        if (pos_ >= src_.size()) {
            current_.kind = Tok::End;
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_' || src_[pos_] == '\'')) {
                word.push_back(src_[pos_]);
                bump();
            }
            current_.kind = keyword(word);
            if (current_.kind == Tok::Ident) current_.text = std::move(word);
            return;
        }
        switch (c) {
            case '(': one(Tok::LParen); return;
            case ')': one(Tok::RParen); return;
            case '{': one(Tok::LBrace); return;
            case '}': one(Tok::RBrace); return;
            case '[': one(Tok::LBracket); return;
            case ']': one(Tok::RBracket); return;
            case '\\': one(Tok::Lambda); return;
            case '.': one(Tok::Dot); return;
            case ';': one(Tok::Semi); return;
            case ',': one(Tok::Comma); return;
            case ':': one(Tok::Colon); return;
            case '-':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                    bump(); bump();
                    current_.kind = Tok::Arrow;
                    return;
                }
                break;
            case '=':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                    bump(); bump();
                    current_.kind = Tok::FatArrow;
                    return;
                }
                one(Tok::Equals);
                return;
            case '|':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                    bump(); bump();
                    current_.kind = Tok::Turnstile;
                    return;
                }
                break;
            default:
                break;
        }
        throw SyntaxError(line_, col_, "a token");
    }

    static Tok keyword(const std::string& word) {
        if (word == "S") return Tok::AtomS;
        if (word == "K") return Tok::AtomK;
        if (word == "let") return Tok::KwLet;
        if (word == "assembly") return Tok::KwAssembly;
        if (word == "per") return Tok::KwPer;
        if (word == "map") return Tok::KwMap;
        if (word == "element") return Tok::KwElement;
        if (word == "class") return Tok::KwClass;
        if (word == "tracker") return Tok::KwTracker;
        return Tok::Ident;
    }

    void one(Tok kind) {
        bump();
        current_.kind = kind;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token current_{Tok::End, {}, 1, 1};
};

class Parser {
public:
    Parser(std::string_view src, const Workspace* env, bool allow_free)
        : lex_(src), env_(env), allow_free_(allow_free) {}

    Workspace parse_workspace() {
        Workspace ws;
        env_ = &ws;
        for (;;) {
            const Token& t = lex_.peek();
            switch (t.kind) {
                case Tok::End:
                    return ws;
                case Tok::KwLet: parse_let(ws); break;
                case Tok::KwAssembly: parse_assembly(ws); break;
                case Tok::KwPer: parse_per(ws); break;
                case Tok::KwMap: parse_map(ws); break;
                default:
                    throw SyntaxError(t.line, t.col, "'let', 'assembly', 'per' or 'map'");
            }
        }
    }

    Term parse_single_term() {
        Term t = parse_term();
        lex_.expect(Tok::End);
        return t;
    }

private:
    void check_fresh(const Workspace& ws, const std::string& name, int namespace_kind) {
        bool taken = false;
        switch (namespace_kind) {
            case 0: taken = ws.find_definition(name) != nullptr; break;
            case 1: taken = ws.find_assembly(name) != nullptr; break;
            case 2: taken = ws.find_per(name) != nullptr; break;
            case 3: taken = ws.find_morphism(name) != nullptr; break;
        }
        if (taken) throw DuplicateNameError(name);
    }

    void parse_let(Workspace& ws) {
        lex_.expect(Tok::KwLet);
        Token name = lex_.expect(Tok::Ident);
        check_fresh(ws, name.text, 0);
        lex_.expect(Tok::Equals);
        Term body = parse_term();
        lex_.expect(Tok::Semi);
        ws.definitions.emplace_back(name.text, std::move(body));
    }

    void parse_assembly(Workspace& ws) {
        lex_.expect(Tok::KwAssembly);
        Token name = lex_.expect(Tok::Ident);
        check_fresh(ws, name.text, 1);
        lex_.expect(Tok::LBrace);
        std::vector<std::string> elements;
        std::map<std::string, std::vector<Term>> realizers;
        while (lex_.peek().kind == Tok::KwElement) {
            lex_.take();
            Token el = lex_.expect(Tok::Ident);
            lex_.expect(Tok::Turnstile);
            std::vector<Term> terms = parse_term_list();
            lex_.expect(Tok::Semi);
            if (realizers.count(el.text)) throw DuplicateElementError(el.text);
            elements.push_back(el.text);
            realizers[el.text] = std::move(terms);
        }
        if (elements.empty()) {
            const Token& t = lex_.peek();
            throw SyntaxError(t.line, t.col, "'element'");
        }
        lex_.expect(Tok::RBrace);
        ws.assemblies.emplace_back(
            name.text, make_assembly(name.text, std::move(elements), std::move(realizers)));
    }

    void parse_per(Workspace& ws) {
        lex_.expect(Tok::KwPer);
        Token name = lex_.expect(Tok::Ident);
        check_fresh(ws, name.text, 2);
        lex_.expect(Tok::LBrace);
        std::vector<std::vector<Term>> blocks;
        while (lex_.peek().kind == Tok::KwClass) {
            lex_.take();
            blocks.push_back(parse_term_list());
            lex_.expect(Tok::Semi);
        }
        lex_.expect(Tok::RBrace);
        ws.pers.push_back(PerDecl{name.text, std::move(blocks)});
    }

    void parse_map(Workspace& ws) {
        lex_.expect(Tok::KwMap);
        Token name = lex_.expect(Tok::Ident);
        check_fresh(ws, name.text, 3);
        lex_.expect(Tok::Colon);
        Token source = lex_.expect(Tok::Ident);
        lex_.expect(Tok::Arrow);
        Token target = lex_.expect(Tok::Ident);
        lex_.expect(Tok::LBrace);
        std::vector<std::pair<std::string, std::string>> mapping;
        while (lex_.peek().kind == Tok::Ident) {
            Token from = lex_.take();
            lex_.expect(Tok::FatArrow);
            Token to = lex_.expect(Tok::Ident);
            lex_.expect(Tok::Semi);
            mapping.emplace_back(from.text, to.text);
        }
        lex_.expect(Tok::KwTracker);
        Term tracker = parse_term();
        lex_.expect(Tok::Semi);
        lex_.expect(Tok::RBrace);
        ws.morphisms.push_back(
            MorphismDecl{name.text, source.text, target.text, std::move(mapping),
                         std::move(tracker)});
    }

    std::vector<Term> parse_term_list() {
        lex_.expect(Tok::LBracket);
        std::vector<Term> terms;
        // The grammar wants at least one term, but an empty list must lex so
        // that construction can report the empty-realizers/empty-block error.
        if (lex_.peek().kind != Tok::RBracket) {
            terms.push_back(parse_term());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                terms.push_back(parse_term());
            }
        }
        lex_.expect(Tok::RBracket);
        return terms;
    }

    Term parse_term() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::AtomS:
                lex_.take();
                return Term::s();
            case Tok::AtomK:
                lex_.take();
                return Term::k();
            case Tok::Ident: {
                lex_.take();
                for (auto it = binders_.rbegin(); it != binders_.rend(); ++it) {
                    if (*it == t.text) return var(t.text);
                }
                if (env_ != nullptr) {
                    if (const Term* def = env_->find_definition(t.text)) return *def;
                }
                if (allow_free_) return var(t.text);
                throw UnboundNameError(t.text);
            }
            case Tok::LParen: {
                lex_.take();
                Term fun = parse_term();
                Term arg = parse_term();
                lex_.expect(Tok::RParen);
                return app(std::move(fun), std::move(arg));
            }
            case Tok::Lambda: {
                lex_.take();
                Token binder = lex_.expect(Tok::Ident);
                lex_.expect(Tok::Dot);
                binders_.push_back(binder.text);
                Term body = parse_term();
                binders_.pop_back();
                return abstract(binder.text, body);
            }
            default:
                throw SyntaxError(t.line, t.col, "a term");
        }
    }

    Lexer lex_;
    const Workspace* env_;
    bool allow_free_;
    std::vector<std::string> binders_;
};

}  // namespace

const Term* Workspace::find_definition(const std::string& name) const {
    for (const auto& [n, t] : definitions) {
        if (n == name) return &t;
    }
    return nullptr;
}

const Assembly* Workspace::find_assembly(const std::string& name) const {
    for (const auto& [n, a] : assemblies) {
        if (n == name) return &a;
    }
    return nullptr;
}

const PerDecl* Workspace::find_per(const std::string& name) const {
    for (const PerDecl& p : pers) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

const MorphismDecl* Workspace::find_morphism(const std::string& name) const {
    for (const MorphismDecl& m : morphisms) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

Workspace parse_workspace(std::string_view text) {
    return Parser(text, nullptr, false).parse_workspace();
}

Term parse_term(std::string_view text, const Workspace* ws, bool allow_free) {
    return Parser(text, ws, allow_free).parse_single_term();
}

}  // namespace realizability

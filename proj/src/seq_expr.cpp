#include "amideal/seq_expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "amideal/corpus.hpp"
#include "amideal/envelopes.hpp"
#include "amideal/errors.hpp"
#include "amideal/transforms.hpp"

namespace amideal {

namespace {

using Kind = SeqExpr::Kind;

const std::map<std::string, Kind>& op_table() {
    static const std::map<std::string, Kind> t = {
        {"am", Kind::am},           {"aminf", Kind::aminf},
        {"d", Kind::ampliate},      {"dinv", Kind::contract},
        {"und", Kind::und},         {"lnd", Kind::lnd},
        {"uni", Kind::uni},         {"lni", Kind::lni},
        {"concmaj", Kind::concmaj}, {"convmin", Kind::convmin},
        {"plus", Kind::plus},       {"times", Kind::times},
        {"div", Kind::div},         {"min", Kind::min},
        {"pow", Kind::pow},
    };
    return t;
}

bool is_atom_name(const std::string& s) {
    if (s == "pow3") return true;
    const auto& names = corpus_names();
    return std::find(names.begin(), names.end(), s) != names.end();
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(pos, std::string("expected '") + c + "'");
        ++pos;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError(start, "expected a name");
        return text.substr(start, pos - start);
    }

    Rat number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/' ||
                text[pos] == '-'))
            ++pos;
        if (pos == start) throw ParseError(start, "expected a number");
        try {
            return parse_rat(text.substr(start, pos - start));
        } catch (const Error&) {
            throw ParseError(start, "malformed rational");
        }
    }

    SeqExpr expr() {
        skip_ws();
        std::size_t name_pos = pos;
        std::string name = ident();
        auto op = op_table().find(name);
        if (op != op_table().end()) {
            SeqExpr e;
            e.kind = op->second;
            expect('(');
            switch (e.kind) {
                case Kind::ampliate:
                case Kind::contract: {
                    std::size_t mpos = pos;
                    skip_ws();
                    mpos = pos;
                    Rat m = number();
                    if (m <= 0 || m.get_den() != 1)
                        throw ParseError(mpos, "replication factor must be a positive integer");
                    e.m = m.get_num().get_ui();
                    expect(',');
                    e.args.push_back(expr());
                    break;
                }
                case Kind::pow: {
                    e.args.push_back(expr());
                    expect(',');
                    std::size_t ppos = pos;
                    skip_ws();
                    ppos = pos;
                    Rat p = number();
                    if (p <= 0) throw ParseError(ppos, "exponent must be positive");
                    e.params.push_back(p);
                    break;
                }
                case Kind::plus:
                case Kind::times:
                case Kind::div:
                case Kind::min:
                    e.args.push_back(expr());
                    expect(',');
                    e.args.push_back(expr());
                    break;
                default:  // unary
                    e.args.push_back(expr());
                    break;
            }
            expect(')');
            return e;
        }
        if (!is_atom_name(name))
            throw ParseError(name_pos, "unknown sequence name '" + name + "'");
        SeqExpr e;
        e.kind = Kind::atom;
        e.name = name;
        if (peek() == '(') {
            ++pos;
            if (peek() != ')') {
                e.params.push_back(number());
                while (peek() == ',') {
                    ++pos;
                    e.params.push_back(number());
                }
            }
            expect(')');
        }
        return e;
    }
};

std::vector<Interval> window_plumbing(const SeqExpr& e, Index n);

// Children whose exact window values are required (hull inputs).
Prefix exact_window(const SeqExpr& e, Index n) {
    auto w = eval_window(e, n);
    Prefix p;
    for (Index i = 0; i < n; ++i) {
        if (!w[i].is_point()) throw NonPointInterval(i + 1);
        p.push_back(w[i].value());
    }
    return p;
}

}  // namespace

SeqExpr parse_seq_expr(const std::string& text) {
    Parser p(text);
    SeqExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "trailing input");
    return e;
}

SeqExpr parse_seq_expr_prefix(const std::string& text, std::size_t& pos) {
    Parser p(text);
    p.pos = pos;
    SeqExpr e = p.expr();
    pos = p.pos;
    return e;
}

std::string to_string(const SeqExpr& e) {
    if (e.kind == Kind::atom) {
        std::string s = e.name;
        if (!e.params.empty()) {
            s += '(';
            for (std::size_t i = 0; i < e.params.size(); ++i) {
                if (i) s += ',';
                s += to_string(e.params[i]);
            }
            s += ')';
        }
        return s;
    }
    std::string op;
    for (const auto& [name, kind] : op_table())
        if (kind == e.kind) op = name;
    std::string s = op + "(";
    if (e.kind == Kind::ampliate || e.kind == Kind::contract)
        s += std::to_string(e.m) + ",";
    for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ',';
        s += to_string(e.args[i]);
    }
    if (e.kind == Kind::pow) s += "," + to_string(e.params[0]);
    s += ')';
    return s;
}

Seq to_seq(const SeqExpr& e) {
    switch (e.kind) {
        case Kind::atom:
            return e.name == "pow3" ? pow3_seq() : corpus_seq(e.name, e.params);
        case Kind::am:
            return seq_am(to_seq(e.args[0]));
        case Kind::aminf:
            return seq_aminf(to_seq(e.args[0]));
        case Kind::ampliate:
            return seq_ampliate(e.m, to_seq(e.args[0]));
        case Kind::contract:
            return seq_contract(e.m, to_seq(e.args[0]));
        case Kind::und:
            return envelope_seq(EnvMode::und, to_seq(e.args[0]));
        case Kind::lnd:
            return envelope_seq(EnvMode::lnd, to_seq(e.args[0]));
        case Kind::uni:
            return envelope_seq(EnvMode::uni, to_seq(e.args[0]));
        case Kind::lni:
            return envelope_seq(EnvMode::lni, to_seq(e.args[0]));
        case Kind::concmaj:
        case Kind::convmin:
            throw BadParams("hull operators evaluate on a window only");
        case Kind::plus:
            return seq_add(to_seq(e.args[0]), to_seq(e.args[1]));
        case Kind::times:
            return seq_mul(to_seq(e.args[0]), to_seq(e.args[1]));
        case Kind::div:
            return seq_div(to_seq(e.args[0]), to_seq(e.args[1]));
        case Kind::min:
            return seq_min(to_seq(e.args[0]), to_seq(e.args[1]));
        case Kind::pow:
            return seq_pow(to_seq(e.args[0]), e.params[0]);
    }
    throw BadParams("unhandled expression node");
}

std::vector<Interval> eval_window(const SeqExpr& e, Index n) {
    if (n == 0) return {};
    switch (e.kind) {
        case Kind::atom:
        case Kind::aminf:
        case Kind::uni:
        case Kind::lnd:
        case Kind::pow:
            return materialize_intervals(to_seq(e), n);
        case Kind::am: {
            auto w = eval_window(e.args[0], n);
            Interval run(Rat(0));
            for (Index i = 0; i < n; ++i) {
                run += w[i];
                w[i] = run.scale(Rat(1, static_cast<unsigned long>(i) + 1));
            }
            return w;
        }
        case Kind::ampliate: {
            auto w = eval_window(e.args[0], (n + e.m - 1) / e.m);
            std::vector<Interval> out;
            out.reserve(n);
            for (Index i = 0; out.size() < n; ++i)
                for (Index r = 0; r < e.m && out.size() < n; ++r) out.push_back(w[i]);
            return out;
        }
        case Kind::contract: {
            auto w = eval_window(e.args[0], n * e.m);
            std::vector<Interval> out;
            out.reserve(n);
            for (Index i = 1; i <= n; ++i) out.push_back(w[i * e.m - 1]);
            return out;
        }
        case Kind::und:
        case Kind::lni: {
            auto w = eval_window(e.args[0], n);
            for (Index i = 1; i < n; ++i)
                w[i] = e.kind == Kind::und ? imax(w[i - 1], w[i]) : imin(w[i - 1], w[i]);
            return w;
        }
        case Kind::concmaj: {
            auto hull = concave_majorant(exact_window(e.args[0], n));
            std::vector<Interval> out;
            for (Index i = 1; i <= n; ++i) out.push_back(Interval(hull.values[i]));
            return out;
        }
        case Kind::convmin: {
            if (n < 2) throw BadParams("convmin window needs n >= 2");
            Prefix w = exact_window(e.args[0], n);
            Prefix tail;
            for (Index i = 2; i <= n; ++i) tail.push_back(w[i]);
            auto hull = convex_minorant(tail, ConvexBoundary::zero_limit);
            std::vector<Interval> out;
            out.push_back(Interval(hull.values[1]));
            for (Index i = 1; i < n; ++i) out.push_back(Interval(hull.values[i]));
            return out;
        }
        case Kind::plus:
        case Kind::times:
        case Kind::div:
        case Kind::min: {
            auto a = eval_window(e.args[0], n);
            auto b = eval_window(e.args[1], n);
            for (Index i = 0; i < n; ++i) {
                switch (e.kind) {
                    case Kind::plus:
                        a[i] = a[i] + b[i];
                        break;
                    case Kind::times:
                        a[i] = a[i] * b[i];
                        break;
                    case Kind::div:
                        if (b[i].contains(Rat(0))) throw DivisionByZeroAtIndex(i + 1);
                        a[i] = a[i] / b[i];
                        break;
                    default:
                        a[i] = imin(a[i], b[i]);
                        break;
                }
            }
            return a;
        }
    }
    throw BadParams("unhandled expression node");
}

}  // namespace amideal

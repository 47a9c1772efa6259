#include "amideal/ideals.hpp"

#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "amideal/corpus.hpp"
#include "amideal/envelopes.hpp"
#include "amideal/errors.hpp"

namespace amideal {

namespace {

using IK = IdealExpr::Kind;

const std::map<std::string, IK>& name_table() {
    static const std::map<std::string, IK> t = {
        {"principal", IK::principal},
        {"l1", IK::l1},
        {"om", IK::om},
        {"seom", IK::seom},
        {"lorentz", IK::lorentz},
        {"orlicz", IK::orlicz},
        {"marc", IK::marc},
        {"kdual", IK::kdual},
        {"sta", IK::sta},
        {"stainf", IK::stainf},
        {"am", IK::am},
        {"pam", IK::pam},
        {"int", IK::interior},
        {"cl", IK::cl},
        {"oo", IK::oo},
        {"aminf", IK::aminf},
        {"paminf", IK::paminf},
        {"intinf", IK::intinf},
        {"clinf", IK::clinf},
        {"ooinf", IK::ooinf},
        {"se", IK::se},
        {"sc", IK::sc},
        {"pow", IK::pow},
        {"sum", IK::sum},
        {"cap", IK::cap},
    };
    return t;
}

struct IParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit IParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(pos, std::string("expected '") + c + "'");
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

    IdealExpr expr() {
        skip_ws();
        std::size_t name_pos = pos;
        std::string name = ident();
        auto it = name_table().find(name);
        if (it == name_table().end())
            throw ParseError(name_pos, "unknown ideal name '" + name + "'");
        IdealExpr e;
        e.kind = it->second;
        switch (e.kind) {
            case IK::l1:
            case IK::om:
            case IK::seom:
            case IK::sta:
            case IK::stainf:
                if (peek() == '(') {  // allow an explicit empty argument list
                    ++pos;
                    expect(')');
                }
                return e;
            case IK::principal:
            case IK::lorentz:
            case IK::marc:
                expect('(');
                e.seq_args.push_back(parse_seq_expr_prefix(text, pos));
                expect(')');
                return e;
            case IK::kdual:
                expect('(');
                e.seq_args.push_back(parse_seq_expr_prefix(text, pos));
                while (peek() == ',') {
                    ++pos;
                    e.seq_args.push_back(parse_seq_expr_prefix(text, pos));
                }
                expect(')');
                return e;
            case IK::orlicz: {
                expect('(');
                std::size_t ppos = pos;
                skip_ws();
                ppos = pos;
                e.param = number();
                if (e.param <= 0) throw ParseError(ppos, "exponent must be positive");
                if (peek() == ',') {
                    ++pos;
                    std::size_t fpos = pos;
                    skip_ws();
                    fpos = pos;
                    if (ident() != "small")
                        throw ParseError(fpos, "expected 'small'");
                    e.small = true;
                }
                expect(')');
                return e;
            }
            case IK::pow: {
                expect('(');
                e.args.push_back(expr());
                expect(',');
                std::size_t ppos = pos;
                skip_ws();
                ppos = pos;
                e.param = number();
                if (e.param <= 0) throw ParseError(ppos, "exponent must be positive");
                expect(')');
                return e;
            }
            case IK::sum:
            case IK::cap:
                expect('(');
                e.args.push_back(expr());
                expect(',');
                e.args.push_back(expr());
                expect(')');
                return e;
            default:  // unary operators
                expect('(');
                e.args.push_back(expr());
                expect(')');
                return e;
        }
    }
};

std::string kind_name(IK k) {
    for (const auto& [name, kind] : name_table())
        if (kind == k) return name;
    return "?";
}

Seq omega_seq() { return corpus_seq("omega"); }

NormalForm named(std::string rule, std::string step) {
    NormalForm nf;
    nf.kind = NormalForm::Kind::named_rule;
    nf.rule = std::move(rule);
    nf.steps.push_back(std::move(step));
    return nf;
}

NormalForm reduced(Seq g, std::string step) {
    NormalForm nf;
    nf.kind = NormalForm::Kind::reduced_principal;
    nf.generator = std::move(g);
    nf.steps.push_back(std::move(step));
    return nf;
}

NormalForm unsupported(std::string reason, const std::vector<std::string>& steps) {
    NormalForm nf;
    nf.kind = NormalForm::Kind::unsupported;
    nf.reason = std::move(reason);
    nf.steps = steps;
    return nf;
}

// Trait first, classifier second.
Tri summability(const Seq& g, const CheckConfig& cfg) {
    if (g.traits().summable != Tri::unknown) return g.traits().summable;
    Verdict v = summable(g, cfg);
    if (v.holds()) return Tri::yes;
    if (v.fails()) return Tri::no;
    return Tri::unknown;
}

// Existential search over ampliation orders.  The comparison window scales
// with m so the ampliated sequence is inspected over the same stretch of its
// base sequence at every order.
template <class F>
Verdict exists_m(unsigned M, const CheckConfig& cfg, F run) {
    bool undecided = false;
    Verdict last;
    for (unsigned m = 1; m <= M; ++m) {
        CheckConfig c = cfg;
        c.horizon = cfg.horizon * m;
        Verdict v;
        try {
            v = run(m, c);
        } catch (const DivisionByZeroAtIndex& z) {
            v.decision = Decision::fails;
            v.horizon = c.horizon;
            v.note = "denominator vanishes at index " + std::to_string(z.index);
            v.indices = {z.index};
        }
        if (v.holds()) {
            v.witness_m = m;
            v.m_searched = m;
            return v;
        }
        if (!v.fails()) undecided = true;
        last = v;
    }
    last.decision = undecided ? Decision::indeterminate : Decision::fails;
    last.witness_m.reset();
    last.m_searched = M;
    std::string prefix = undecided ? "undecided for some ampliation order up to "
                                   : "refuted for every ampliation order up to ";
    last.note = prefix + std::to_string(M) + (last.note.empty() ? "" : "; " + last.note);
    return last;
}

// x_{n+1} - x_n; the Lorentz summand against a nondecreasing weight.
Seq diff_seq(const Seq& w) {
    detail::SeqImpl impl;
    impl.name = "diff(" + w.name() + ")";
    impl.exact = w.exact();
    impl.eval = [w](Index n) { return w.at(n + 1) - w.at(n); };
    return Seq::make(std::move(impl));
}

Verdict member_rule(const Seq& probe, const NormalForm& nf, const CheckConfig& cfg);

}  // namespace

IdealExpr parse_ideal(const std::string& text) {
    IParser p(text);
    IdealExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "trailing input");
    return e;
}

std::string to_string(const IdealExpr& e) {
    std::string s = kind_name(e.kind);
    switch (e.kind) {
        case IK::l1:
        case IK::om:
        case IK::seom:
        case IK::sta:
        case IK::stainf:
            return s;
        case IK::principal:
        case IK::lorentz:
        case IK::marc:
            return s + "(" + to_string(e.seq_args[0]) + ")";
        case IK::kdual: {
            s += '(';
            for (std::size_t i = 0; i < e.seq_args.size(); ++i) {
                if (i) s += ',';
                s += to_string(e.seq_args[i]);
            }
            return s + ")";
        }
        case IK::orlicz:
            return s + "(" + to_string(e.param) + (e.small ? ", small" : "") + ")";
        case IK::pow:
            return s + "(" + to_string(e.args[0]) + ", " + to_string(e.param) + ")";
        case IK::sum:
        case IK::cap:
            return s + "(" + to_string(e.args[0]) + ", " + to_string(e.args[1]) + ")";
        default:
            return s + "(" + to_string(e.args[0]) + ")";
    }
}

NormalForm normalize_ideal(const IdealExpr& e, const CheckConfig& cfg) {
    switch (e.kind) {
        case IK::principal:
            return reduced(to_seq(e.seq_args[0]), "principal(" + to_string(e.seq_args[0]) + ")");
        case IK::om:
            return reduced(omega_seq(), "om = principal(omega)");
        case IK::l1:
            return named("l1", "trace-class membership is summability");
        case IK::seom:
            return named("se_omega", "soft interior of the omega ideal: little-o of omega");
        case IK::lorentz: {
            NormalForm nf = named("lorentz", "lorentz(" + to_string(e.seq_args[0]) + ")");
            nf.rule_seq = to_seq(e.seq_args[0]);
            return nf;
        }
        case IK::orlicz: {
            NormalForm nf = named("orlicz", "orlicz power function t^" + to_string(e.param) +
                                                (e.small ? ", all t" : ", some t"));
            nf.rule_param = e.param;
            nf.orlicz_small = e.small;
            return nf;
        }
        case IK::marc: {
            NormalForm nf =
                named("marc", "pre-mean membership against " + to_string(e.seq_args[0]));
            nf.rule_seq = to_seq(e.seq_args[0]);
            return nf;
        }
        case IK::kdual: {
            NormalForm nf = named("kdual", "ampliated products against the factor list");
            for (const auto& a : e.seq_args) nf.rule_seqs.push_back(to_seq(a));
            return nf;
        }
        case IK::sta:
            return named("sta", "union of the omega*log^k principal ideals");
        case IK::stainf:
            return named("stainf", "probe*log^k summable for every k");
        default:
            break;
    }

    if (e.kind == IK::sum || e.kind == IK::cap) {
        NormalForm a = normalize_ideal(e.args[0], cfg);
        NormalForm b = normalize_ideal(e.args[1], cfg);
        std::vector<std::string> steps = a.steps;
        steps.insert(steps.end(), b.steps.begin(), b.steps.end());
        if (a.kind == NormalForm::Kind::reduced_principal &&
            b.kind == NormalForm::Kind::reduced_principal) {
            NormalForm nf =
                e.kind == IK::sum
                    ? reduced(seq_add(a.generator, b.generator),
                              "sum of principal ideals: generator xi + eta")
                    : reduced(seq_min(a.generator, b.generator),
                              "intersection of principal ideals: generator min(xi, eta)");
            steps.push_back(nf.steps.back());
            nf.steps = std::move(steps);
            return nf;
        }
        return unsupported(std::string(e.kind == IK::sum ? "sum" : "intersection") +
                               " is implemented for principal operands only",
                           steps);
    }

    NormalForm child = normalize_ideal(e.args[0], cfg);
    if (child.kind == NormalForm::Kind::unsupported) return child;
    auto step_into = [&](NormalForm nf) {
        std::vector<std::string> steps = child.steps;
        steps.insert(steps.end(), nf.steps.begin(), nf.steps.end());
        nf.steps = std::move(steps);
        return nf;
    };
    const bool is_rp = child.kind == NormalForm::Kind::reduced_principal;
    const bool is_l1 = child.kind == NormalForm::Kind::named_rule && child.rule == "l1";
    const Seq& g = child.generator;

    switch (e.kind) {
        case IK::am:
            if (is_rp)
                return step_into(
                    reduced(seq_am(g), "mean of a principal ideal: (xi)_a = (xi_a)"));
            if (is_l1)
                return step_into(
                    reduced(omega_seq(), "mean of the trace class is the principal ideal of omega"));
            return unsupported("mean of a non-principal ideal", child.steps);
        case IK::pam:
            if (is_rp && g.atom() == "omega")
                return step_into(
                    named("l1", "pre-mean of the omega ideal is the trace class"));
            if (is_rp) {
                NormalForm nf = named("marc", "pre-mean of a principal ideal: means land in (xi)");
                nf.rule_seq = g;
                return step_into(std::move(nf));
            }
            if (is_l1)
                return step_into(named(
                    "am_summable", "pre-mean of the trace class: the probe's means are summable"));
            return unsupported("pre-mean of a non-principal ideal", child.steps);
        case IK::interior: {
            if (!is_rp) return unsupported("interior of a non-principal ideal", child.steps);
            Seq ratio = ratio_with_omega(g);
            if (!ratio.has_tail_inf())
                return unsupported(
                    "interior needs a tail-infimum oracle for the generator/omega ratio",
                    child.steps);
            return step_into(reduced(seq_mul(omega_seq(), envelope_seq(EnvMode::lnd, ratio)),
                                     "interior generator: omega * lnd(xi/omega)"));
        }
        case IK::cl:
            if (is_rp) {
                NormalForm nf =
                    named("closure", "closure of a principal ideal: compare means against xi_a");
                nf.rule_seq = g;
                return step_into(std::move(nf));
            }
            if (is_l1) return step_into(named("l1", "the trace class is mean-closed"));
            return unsupported("closure of a non-principal ideal", child.steps);
        case IK::oo:
            if (!is_rp)
                return unsupported("smallest open cover of a non-principal ideal", child.steps);
            return step_into(
                reduced(seq_mul(omega_seq(), envelope_seq(EnvMode::und, ratio_with_omega(g))),
                        "open-cover generator: omega * und(xi/omega)"));
        case IK::aminf: {
            if (!is_rp)
                return unsupported("mean at infinity of a non-principal ideal", child.steps);
            Tri s = summability(g, cfg);
            if (s == Tri::unknown)
                throw GuardIndeterminate("summability of the generator undecided at horizon " +
                                         std::to_string(cfg.horizon));
            if (s == Tri::no)
                return step_into(
                    named("se_omega", "mean at infinity of a nonsummable principal ideal is "
                                      "the soft interior of the omega ideal"));
            try {
                return step_into(
                    reduced(seq_aminf(g), "mean at infinity: (xi)_ainf = (xi_ainf)"));
            } catch (const NoTailOracle&) {
                return unsupported("mean at infinity needs a tail-sum oracle for the generator",
                                   child.steps);
            }
        }
        case IK::paminf: {
            if (!is_rp)
                return unsupported("pre-mean at infinity of a non-principal ideal", child.steps);
            NormalForm nf = named(
                "pream_inf", "pre-mean at infinity: summable probes whose tails land in (xi)");
            nf.rule_seq = g;
            return step_into(std::move(nf));
        }
        case IK::intinf: {
            if (!is_rp)
                return unsupported("am-infinity interior of a non-principal ideal", child.steps);
            Verdict omega_in = exists_m(cfg.M_max, cfg, [&](unsigned m, const CheckConfig& c) {
                return big_o(omega_seq(), seq_ampliate(m, g), c);
            });
            if (omega_in.holds())
                return step_into(
                    named("se_omega", "omega lies in the ideal, so the am-infinity interior is "
                                      "the soft interior of the omega ideal"));
            if (omega_in.fails())
                return step_into(reduced(
                    seq_mul(omega_seq(), envelope_seq(EnvMode::lni, ratio_with_omega(g))),
                    "am-infinity interior generator: omega * lni(xi/omega)"));
            throw GuardIndeterminate(
                "could not decide whether omega lies in the ideal at horizon " +
                std::to_string(cfg.horizon));
        }
        case IK::clinf: {
            if (!is_rp)
                return unsupported("am-infinity closure of a non-principal ideal", child.steps);
            Tri s = summability(g, cfg);
            if (s == Tri::unknown)
                throw GuardIndeterminate("summability of the generator undecided at horizon " +
                                         std::to_string(cfg.horizon));
            if (s == Tri::no)
                return step_into(
                    named("l1", "am-infinity closure of a nonsummable principal ideal is the "
                                "trace class"));
            try {
                NormalForm nf = named("pream_inf",
                                      "am-infinity closure: tails compared against (xi_ainf)");
                nf.rule_seq = seq_aminf(g);
                return step_into(std::move(nf));
            } catch (const NoTailOracle&) {
                return unsupported(
                    "am-infinity closure needs a tail-sum oracle for the generator",
                    child.steps);
            }
        }
        case IK::ooinf: {
            if (!is_rp)
                return unsupported("smallest am-infinity open cover of a non-principal ideal",
                                   child.steps);
            Verdict small = little_o(g, omega_seq(), cfg);
            if (small.fails())
                return unsupported(
                    "generator is not little-o of omega; the am-infinity open cover does not "
                    "apply",
                    child.steps);
            if (!small.holds())
                throw GuardIndeterminate(
                    "could not certify generator = o(omega) at horizon " +
                    std::to_string(cfg.horizon));
            Seq ratio = ratio_with_omega(g);
            if (!ratio.has_tail_sup())
                return unsupported(
                    "am-infinity open cover needs a tail-supremum oracle for the ratio",
                    child.steps);
            return step_into(
                reduced(seq_mul(omega_seq(), envelope_seq(EnvMode::uni, ratio)),
                        "am-infinity open-cover generator: omega * uni(xi/omega)"));
        }
        case IK::se: {
            if (!is_rp) return unsupported("soft interior of a non-principal ideal", child.steps);
            NormalForm nf = named("se", "soft interior: little-o against ampliations of xi");
            nf.rule_seq = g;
            return step_into(std::move(nf));
        }
        case IK::sc:
            if (is_rp)
                return step_into(reduced(
                    g, "countably generated ideals are strongly soft-complemented: sc(I) = I"));
            return unsupported(
                "soft cover of a non-principal ideal has no finite characterization here",
                child.steps);
        case IK::pow: {
            if (is_rp)
                return step_into(
                    reduced(seq_pow(g, e.param),
                            "power of a principal ideal: generator xi^" + to_string(e.param)));
            if (is_l1) {
                NormalForm nf = named("pow_l1", "power of the trace class: probe^(1/p) summable");
                nf.rule_param = e.param;
                return step_into(std::move(nf));
            }
            return unsupported("power of a non-principal ideal", child.steps);
        }
        default:
            return unsupported("no rule for operator " + kind_name(e.kind), child.steps);
    }
}

namespace {

Verdict member_rule(const Seq& probe, const NormalForm& nf, const CheckConfig& cfg) {
    if (nf.rule == "l1") return summable(probe, cfg);
    if (nf.rule == "se_omega") return little_o(probe, omega_seq(), cfg);
    if (nf.rule == "closure") {
        Verdict v = big_o(seq_am(probe), seq_am(nf.rule_seq), cfg);
        v.note = "means compared; ampliation search unnecessary for mean sequences" +
                 (v.note.empty() ? "" : "; " + v.note);
        return v;
    }
    if (nf.rule == "marc")
        return exists_m(cfg.M_max, cfg, [&](unsigned m, const CheckConfig& c) {
            return big_o(seq_am(probe), seq_ampliate(m, nf.rule_seq), c);
        });
    if (nf.rule == "am_summable") return summable(seq_am(probe), cfg);
    if (nf.rule == "pream_inf") {
        Verdict s = summable(probe, cfg);
        if (!s.holds()) {
            s.note = "probe must be summable first" + (s.note.empty() ? "" : "; " + s.note);
            return s;
        }
        Seq tails = seq_aminf(probe);
        return exists_m(cfg.M_max, cfg, [&](unsigned m, const CheckConfig& c) {
            return big_o(tails, seq_ampliate(m, nf.rule_seq), c);
        });
    }
    if (nf.rule == "se")
        return exists_m(cfg.M_max, cfg, [&](unsigned m, const CheckConfig& c) {
            return little_o(probe, seq_ampliate(m, nf.rule_seq), c);
        });
    if (nf.rule == "lorentz") return summable(seq_mul(probe, diff_seq(nf.rule_seq)), cfg);
    if (nf.rule == "orlicz") {
        // Power Orlicz functions: M(t x) = (t x)^p.  The grid is kept for the
        // interface contract even though the p-th power makes every t agree.
        bool undecided = false;
        Verdict last;
        for (int j = -static_cast<int>(cfg.K_max); j <= static_cast<int>(cfg.K_max); ++j) {
            Rat t = pow_int(Rat(2), j);
            Verdict v = summable(seq_pow(seq_scale(t, probe), nf.rule_param), cfg);
            v.t_log2 = static_cast<unsigned>(j < 0 ? -j : j);
            if (nf.orlicz_small) {
                if (v.fails()) {
                    v.note = "diverges at t = 2^" + std::to_string(j) +
                             (v.note.empty() ? "" : "; " + v.note);
                    return v;
                }
                if (!v.holds()) undecided = true;
            } else {
                if (v.holds()) {
                    v.note = "converges at t = 2^" + std::to_string(j) +
                             (v.note.empty() ? "" : "; " + v.note);
                    return v;
                }
                if (!v.fails()) undecided = true;
            }
            last = v;
        }
        last.decision = undecided ? Decision::indeterminate
                                  : (nf.orlicz_small ? Decision::holds : Decision::fails);
        last.k_searched = cfg.K_max;
        last.note = std::string(nf.orlicz_small ? "holds" : "fails") +
                    " across the whole t-grid (|log2 t| <= " + std::to_string(cfg.K_max) + ")";
        return last;
    }
    if (nf.rule == "kdual") {
        bool undecided = false;
        Verdict last;
        for (std::size_t xi = 0; xi < nf.rule_seqs.size(); ++xi) {
            for (unsigned m = 1; m <= cfg.M_max; ++m) {
                CheckConfig c = cfg;
                c.horizon = cfg.horizon * m;
                Verdict v = summable(seq_mul(seq_ampliate(m, probe), nf.rule_seqs[xi]), c);
                if (v.fails()) {
                    v.witness_m = m;
                    v.note = "ampliated product with factor " + std::to_string(xi + 1) +
                             " diverges at m = " + std::to_string(m) +
                             (v.note.empty() ? "" : "; " + v.note);
                    return v;
                }
                if (!v.holds()) undecided = true;
                last = v;
            }
        }
        last.decision = undecided ? Decision::indeterminate : Decision::holds;
        last.m_searched = cfg.M_max;
        last.note = "every ampliated product summable up to m = " + std::to_string(cfg.M_max);
        return last;
    }
    if (nf.rule == "sta") {
        bool undecided = false;
        Verdict last;
        for (unsigned k = 0; k <= cfg.K_max; ++k) {
            Seq target = corpus_seq("omlog", {Rat(k)});
            Verdict v = exists_m(cfg.M_max, cfg, [&](unsigned m, const CheckConfig& c) {
                return big_o(probe, seq_ampliate(m, target), c);
            });
            if (v.holds()) {
                v.k_searched = k;
                v.note = "dominated by omega*log^" + std::to_string(k) +
                         (v.note.empty() ? "" : "; " + v.note);
                return v;
            }
            if (!v.fails()) undecided = true;
            last = v;
        }
        last.decision = undecided ? Decision::indeterminate : Decision::fails;
        last.k_searched = cfg.K_max;
        last.note = "not dominated by omega*log^k for any k <= " + std::to_string(cfg.K_max);
        return last;
    }
    if (nf.rule == "stainf") {
        bool undecided = false;
        Verdict last;
        for (unsigned k = 0; k <= cfg.K_max; ++k) {
            Verdict v = summable(seq_mul_log_pow(probe, k), cfg);
            if (v.fails()) {
                v.k_searched = k;
                v.note = "probe*log^" + std::to_string(k) + " diverges" +
                         (v.note.empty() ? "" : "; " + v.note);
                return v;
            }
            if (!v.holds()) undecided = true;
            last = v;
        }
        last.decision = undecided ? Decision::indeterminate : Decision::holds;
        last.k_searched = cfg.K_max;
        last.note = "probe*log^k summable for every k <= " + std::to_string(cfg.K_max);
        return last;
    }
    if (nf.rule == "pow_l1") return summable(seq_pow(probe, Rat(1) / nf.rule_param), cfg);
    throw UnsupportedIdeal("no membership rule named '" + nf.rule + "'");
}

}  // namespace

Verdict member(const Seq& probe, const IdealExpr& e, const CheckConfig& cfg) {
    NormalForm nf = normalize_ideal(e, cfg);
    if (nf.kind == NormalForm::Kind::unsupported) throw UnsupportedIdeal(nf.reason);
    if (nf.kind == NormalForm::Kind::reduced_principal)
        return exists_m(cfg.M_max, cfg, [&](unsigned m, const CheckConfig& c) {
            return big_o(probe, seq_ampliate(m, nf.generator), c);
        });
    return member_rule(probe, nf, cfg);
}

Seq generator_of(const IdealExpr& e, const CheckConfig& cfg) {
    NormalForm nf = normalize_ideal(e, cfg);
    if (nf.kind == NormalForm::Kind::reduced_principal) return nf.generator;
    if (nf.kind == NormalForm::Kind::named_rule) {
        if (nf.rule == "se_omega")
            throw NotPrincipal(
                "the normal form is the soft interior of the omega ideal, which no single "
                "sequence generates");
        throw NotPrincipal("the normal form is the membership rule '" + nf.rule +
                           "', not a principal generator");
    }
    throw UnsupportedIdeal(nf.reason);
}

}  // namespace amideal

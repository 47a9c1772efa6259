#pragma once

#include <string>
#include <vector>

#include "amideal/relations.hpp"
#include "amideal/seq.hpp"
#include "amideal/seq_expr.hpp"

namespace amideal {

// AST of ideal expressions: named base ideals plus the mean/soft operators.
struct IdealExpr {
    enum class Kind {
        // base ideals
        principal,  // principal(seq): generated by one sequence
        l1,         // summable sequences
        om,         // principal(omega), kept separate for printing
        seom,       // soft interior of the omega ideal: little-o of omega
        lorentz,    // lorentz(weight seq)
        orlicz,     // orlicz(p) / orlicz(p, small): power function t^p
        marc,       // marc(seq): sequences whose means lie in principal(seq)
        kdual,      // kdual(seq, ...): ampliated products summable
        sta,        // union of the omega*log^k principal ideals
        stainf,     // probe*log^k summable for every k
        // operators
        am,
        pam,
        interior,
        cl,
        oo,
        aminf,
        paminf,
        intinf,
        clinf,
        ooinf,
        se,
        sc,
        pow,
        sum,
        cap
    };
    Kind kind = Kind::l1;
    std::vector<SeqExpr> seq_args;  // principal/lorentz/marc/kdual
    Rat param = Rat(0);             // orlicz/pow exponent
    bool small = false;             // orlicz: require all t instead of some t
    std::vector<IdealExpr> args;    // ideal children
};

IdealExpr parse_ideal(const std::string& text);  // ParseError with offset
std::string to_string(const IdealExpr& e);       // round-trips through parse

// Result of rewriting an ideal expression to one of the closed forms the
// membership engine understands.
struct NormalForm {
    enum class Kind { reduced_principal, named_rule, unsupported };
    Kind kind = Kind::unsupported;
    Seq generator;                   // reduced_principal: one generating Seq
    std::string rule;                // named_rule id (l1, se_omega, closure, ...)
    Seq rule_seq;                    // rule's sequence parameter, if any
    std::vector<Seq> rule_seqs;      // kdual factor list
    Rat rule_param = Rat(0);         // pow_l1/orlicz exponent
    bool orlicz_small = false;
    std::string reason;              // unsupported: human-readable why
    std::vector<std::string> steps;  // rewrites applied, innermost first
};

// Applies the closed-form rewrites as far as possible.  Some rewrites are
// guarded by horizon-limited facts (summability of a generator, whether the
// harmonic sequence lies in the ideal); an undecidable guard raises
// GuardIndeterminate instead of guessing.
NormalForm normalize_ideal(const IdealExpr& e, const CheckConfig& cfg = {});

// Horizon-limited membership verdict for a probe sequence.  Quantified rules
// search ampliation orders m <= cfg.M_max (window scaled to m * horizon) and
// exponents k <= cfg.K_max; universally quantified rules can only hold "up to
// bound" (caps recorded on the verdict), while their failures carry genuine
// witnesses.  Throws UnsupportedIdeal when normalize_ideal has no rule.
Verdict member(const Seq& probe, const IdealExpr& e, const CheckConfig& cfg = {});

// The generating sequence when the normal form is principal; NotPrincipal
// otherwise (e.g. the am-infinity interior of an ideal containing omega is
// the soft interior of the omega ideal, which no single sequence generates).
Seq generator_of(const IdealExpr& e, const CheckConfig& cfg = {});

}  // namespace amideal

#pragma once

#include <string>
#include <vector>

#include "amideal/interval.hpp"
#include "amideal/seq.hpp"

namespace amideal {

// AST of the sequence-expression language shared by the CLI and ideal
// arguments: corpus atoms plus transform, envelope, hull, and pointwise
// operators.
struct SeqExpr {
    enum class Kind {
        atom,      // corpus name, optional rational params; also pow3
        am,        // arithmetic mean
        aminf,     // arithmetic mean at infinity
        ampliate,  // d(m, e)
        contract,  // dinv(m, e)
        und,
        lnd,
        uni,
        lni,
        concmaj,  // windowed concave majorant
        convmin,  // windowed convex minorant
        plus,
        times,
        div,
        min,
        pow
    };
    Kind kind = Kind::atom;
    std::string name;         // atom
    std::vector<Rat> params;  // atom params; pow exponent at params[0]
    Index m = 0;              // ampliate/contract factor
    std::vector<SeqExpr> args;
};

// Throws ParseError with the byte offset of the offending token so callers
// can print caret diagnostics.  Names (atoms and operators) are validated
// here; parameter ranges are checked at evaluation time.
SeqExpr parse_seq_expr(const std::string& text);

// Same, but starts at pos and leaves pos just past the parsed expression —
// lets other grammars (ideal expressions) embed sequence arguments.
SeqExpr parse_seq_expr_prefix(const std::string& text, std::size_t& pos);

// Canonical text form; parse_seq_expr(to_string(e)) reproduces e.
std::string to_string(const SeqExpr& e);

// Whole-sequence view.  Hull operators have no sequence form (they need a
// window) and raise BadParams; everything else maps onto Seq combinators.
Seq to_seq(const SeqExpr& e);

// First n entries.  Pointwise/running operators evaluate on the window in
// interval arithmetic; hull operators require exactly-known child values.
// convmin drops j = 1, hulls [2, n] against the zero limit, and extends the
// first hull value leftward to j = 1 (needs n >= 2); concmaj hulls the
// window as given.  Operators that need a tail oracle (aminf, uni, lnd) and
// pow evaluate through to_seq, so their subtrees cannot contain hulls.
std::vector<Interval> eval_window(const SeqExpr& e, Index n);

}  // namespace amideal

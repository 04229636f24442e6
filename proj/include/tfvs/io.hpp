#pragma once

#include <optional>
#include <string>

#include "tfvs/approx.hpp"
#include "tfvs/tournament.hpp"

namespace tfvs {

// Parse failure with position: 1-based line and column.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& reason);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Tournament file, text form:
//   line 1:        n
//   line 2:        n weights, reduced rationals "p" or "p/q", single spaces
//   lines 3..n+2:  adjacency rows of n characters over {0,1,-}; row u,
//                  column v is '1' iff u->v, '0' iff v->u, '-' iff u = v
struct ParsedTournament {
    Tournament tournament;
    Weights weights;
};
ParsedTournament parse_tournament(const std::string& text);
std::string write_tournament(const Tournament& t, const Weights& w);

// JSON alternative carrying the same fields: {"n":..., "weights":[...],
// "matrix":["-10","0-1","10-"]}.
ParsedTournament parse_tournament_json(const std::string& text);
std::string write_tournament_json(const Tournament& t, const Weights& w);

// Machine-readable solve report.  The weight always equals the sum of the
// listed vertices' weights; ratio is present only when the oracle ran.
struct ResultDocument {
    std::string algorithm;
    int n = 0;
    VertexSet fvs;
    Rational weight{0};
    std::map<int, StageTag> stage_tags;
    RoundingTrace trace;
    bool has_trace = false;
    int stall_restarts = -1; // layer-stage telemetry; -1 when not applicable
    std::optional<Rational> oracle_optimum;
    std::optional<Rational> ratio;
    bool verified = false;

    std::string to_text() const;
    std::string to_json() const; // pretty-printed

    static ResultDocument from(const std::string& algorithm, const Tournament& t,
                               const Weights& w, const FvsResult& result);
};

} // namespace tfvs

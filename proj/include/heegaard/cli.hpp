#pragma once

// Diagram text format, structured reports and the command dispatcher used by
// the heegaard executable.
//
//   genus 2
//   minus: 1 0 0 0 ; 0 1 0 0
//   plus:  1 0 3 0 ; 0 1 0 5   # comment
//
// Rows hold 2g integers in the (x_1..x_g, p_1..p_g) basis.

#include "heegaard/linkform.hpp"
#include "heegaard/qsearch.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heegaard {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Throws ParseError for syntax and shape errors, std::invalid_argument
/// (prefixed by the offending system) when a row system is not a Lagrangian.
HeegaardDiagramH1 parse_diagram(std::string_view text);

std::string serialize_diagram(const HeegaardDiagramH1& d);

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json int_json(const Int& v);
Json vector_json(const IntVector& v);
Json diagram_json(const HeegaardDiagramH1& d);
Json homology_json(const HeegaardDiagramH1& d, const std::string& input);
Json linkform_json(const HeegaardDiagramH1& d, const std::string& input);
Json diagonalize_json(const HeegaardDiagramH1& d, const std::string& input);

/// Full obstruction report. Throws BoundExceeded like is_hyperbolic.
Json build_report(const HeegaardDiagramH1& d, const std::string& input, std::int64_t bound = kDefaultHyperbolicBound,
                  unsigned threads = 1);

Json search_q_json(const SymplecticMap& theta, const std::string& theta_name, std::int64_t entries,
                   unsigned threads = 1);
Json ub0_json(const SymplecticMap& theta, const std::string& theta_name, std::int64_t bound);

/// "key: value" lines; nested values are printed as compact JSON.
std::string render_text(const Json& j);

/// Exit codes: 0 success, 1 usage or input error, 2 bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heegaard

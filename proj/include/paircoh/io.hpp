#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "paircoh/measures.hpp"
#include "paircoh/states.hpp"
#include "paircoh/sweep.hpp"
#include "paircoh/witnesses.hpp"

namespace paircoh {

// CSV: header row, ',' separator, 15 significant digits, '\n' endings.
std::string format_number(double v);

void write_csv(std::ostream& out, const SweepTable& table);
// Columns x_a, x_b, P.
void write_csv(std::ostream& out, const QuadratureGrid& grid);
// Columns |alpha|, |beta|, rel_phase, Q, near_zero (1 when Q < zero_tolerance).
void write_csv(std::ostream& out, const QGrid& grid, double zero_tolerance);

using nlohmann::json;

void to_json(json& j, const PairedEigenvalues& p);
void from_json(const json& j, PairedEigenvalues& p);
void to_json(json& j, const PTSpectrum& s);
void from_json(const json& j, PTSpectrum& s);
void to_json(json& j, const EntropyRecord& r);
void from_json(const json& j, EntropyRecord& r);
void to_json(json& j, const WitnessReport& r);
void from_json(const json& j, WitnessReport& r);
void to_json(json& j, const SweepTable& t);
void from_json(const json& j, SweepTable& t);
void to_json(json& j, const QuadratureGrid& g);
void to_json(json& j, const QGrid& g);

}  // namespace paircoh

#ifndef GAIDS_MODEL_IO_HPP
#define GAIDS_MODEL_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "gaids/chromosome.hpp"

namespace gaids {

inline constexpr std::string_view kModelFormatTag = "gaids-model";
inline constexpr int kModelFormatVersion = 1;

/*
 * Line-oriented text model:
 *
 *   gaids-model 1 <range_used> <training_size> 38
 *   <label>,<category>,<member_count>,<spread>,<c_1>,...,<c_38>    (one per chromosome)
 *   norm_min,<38 values>
 *   norm_max,<38 values>
 *
 * Reals use the shortest representation that round-trips exactly.
 */
void write_model(std::ostream& out, const ChromosomeModel& model);
ChromosomeModel read_model(std::istream& in);

void save_model(const std::string& path, const ChromosomeModel& model);
ChromosomeModel load_model(const std::string& path);

/// Shortest decimal form that parses back to the same double.
std::string format_real(double value);

}  // namespace gaids

#endif

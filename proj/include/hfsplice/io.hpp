#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hfsplice/bordered.hpp"
#include "hfsplice/gf2.hpp"
#include "hfsplice/knot_system.hpp"
#include "hfsplice/splice.hpp"

namespace hfsplice {

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input was readable but is not a well-formed document of the expected shape.
class ParseError : public IoError {
 public:
  using IoError::IoError;
};

using Json = nlohmann::ordered_json;

Json to_json(const Gf2Matrix& m);
Gf2Matrix matrix_from_json(const Json& j);

Json to_json(const KnotSystem& k);
/// Shape mismatches between the ranks and the tau matrices are left for validate() to report.
KnotSystem knot_system_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const SpliceReport& r);
Json to_json(const TypeDModule& m);
Json to_json(const StructureReport& r);
Json to_json(const AdmissibleReport& r);

Json read_json_file(const std::filesystem::path& p);
KnotSystem load_knot_system(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

}  // namespace hfsplice

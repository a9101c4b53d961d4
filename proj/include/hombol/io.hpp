#pragma once

#include <string>

#include "hombol/algebra.hpp"
#include "hombol/report.hpp"

namespace hombol {
namespace io {

// Algebra files are JSON: name, dimension, degrees, optional
// basis_labels, optional sparse binary/ternary product lists, optional
// dense row-major alpha. Rationals travel as strings. Loading validates
// the schema, grading compatibility of every product and evenness of
// alpha; any violation is a FormatError.

SuperAlgebra algebra_from_json_text(const std::string& text, const std::string& origin = "<memory>");
std::string algebra_to_json_text(const SuperAlgebra& a);
SuperAlgebra load_algebra(const std::string& path);
void save_algebra(const SuperAlgebra& a, const std::string& path);

// Morphism files: name (optional), dimension, optional degrees, dense
// row-major matrix of rational strings.
Mat morphism_from_json_text(const std::string& text, const std::string& origin = "<memory>");
std::string morphism_to_json_text(const Mat& m, const std::string& name,
                                  const std::vector<int>* degrees = nullptr);
Mat load_morphism(const std::string& path);
void save_morphism(const Mat& m, const std::string& name, const std::string& path,
                   const std::vector<int>* degrees = nullptr);

std::string report_to_json_text(const CheckReport& report, const Grading& grading);
std::string report_to_text(const CheckReport& report, const Grading& grading);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace io
}  // namespace hombol

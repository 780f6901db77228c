#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sunada/covers.hpp"
#include "sunada/enumeration.hpp"
#include "sunada/group.hpp"
#include "sunada/intersections.hpp"
#include "sunada/matrix.hpp"
#include "sunada/words.hpp"

namespace sunada {

/// The full pipeline setup, parseable from the sectioned key = value text
/// format (configs/paper.cfg holds the built-in default).
struct PipelineConfig {
  int modulus = 8;
  Alphabet surface_alphabet{"abcd"};
  std::vector<GroupElement> rho_images;          // per surface generator
  std::vector<GroupElement> subgroup_H;
  std::vector<GroupElement> subgroup_K;
  std::string alpha_text = "a b d [d,c^-1] d^-1";         // surface alphabet
  std::string alpha_subsurface_text = "a b x a b a^-1 b^-1 x^-1";  // on {a,b,x}
  std::string tau_alpha_subsurface_text =
      "a^-1 b^-1 b^-1 x^-1 b a^-1 b^-1 a x b";
  std::vector<std::string> tau_images;           // per surface generator
  std::string x_in_surface_text = "d a^-1";      // class of the third basis curve
  std::string metric_preset = "paper";           // or a metric file path
  CandidateConstraints constraints;
  int threads = 1;

  static PipelineConfig paper_defaults();
};

PipelineConfig parse_config(const std::string& text);
PipelineConfig load_config_file(const std::string& path);

/// Metric files: one "<gen> = p/q p/q p/q p/q" line per generator (row major).
MetricAssignment load_metric_file(const std::string& path);
MetricAssignment metric_from_config(const PipelineConfig& cfg);

/// Parsed bundle of everything the pipeline stages consume.
struct PipelineContext {
  FiniteAffineGroup group;
  Subgroup H;
  Subgroup K;
  Homomorphism rho;          // on the surface alphabet (a,b,c,d)
  Endomorphism tau;          // on the surface alphabet
  Word alpha;                // surface alphabet, reduced
  Alphabet sub_alphabet;     // {a,b,x}
  CyclicWord alpha_sub;      // subsurface form
  CyclicWord tau_alpha_sub;  // subsurface form of tau(alpha)
  Homomorphism rho_sub;      // on {a,b,x}; x image = rho(x_in_surface)
  MetricAssignment metric;
  RibbonStructure ribbon;
  Subgroup L;                // <rho(alpha)>
  CosetSpace GmodL;          // left cosets, gamma labels when available

  explicit PipelineContext(const PipelineConfig& cfg);
};

}  // namespace sunada

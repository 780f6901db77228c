#include "sunada/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sunada {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// "(u,v) (u,v) ..." -> elements
std::vector<GroupElement> parse_element_list(const std::string& s, int modulus) {
  std::vector<GroupElement> out;
  std::string cur;
  for (char c : s) {
    if (c == '(') cur = "(";
    else if (c == ')') { cur += ')'; out.push_back(parse_group_element(cur, modulus)); cur.clear(); }
    else if (!cur.empty()) cur += c;
  }
  return out;
}

}  // namespace

PipelineConfig PipelineConfig::paper_defaults() {
  PipelineConfig cfg;
  cfg.modulus = 8;
  cfg.surface_alphabet = Alphabet("abcd");
  cfg.rho_images = {{3, 0}, {5, 0}, {1, 0}, {1, 1}};
  cfg.subgroup_H = {{1, 0}, {3, 0}, {5, 0}, {7, 0}};
  cfg.subgroup_K = {{1, 0}, {3, 4}, {5, 4}, {7, 0}};
  cfg.tau_images = {"a^-1", "b^-1", "a c^-1 d c^-1 d^-1 c a^-1", "b^-1 a d^-1 b a^-1"};
  return cfg;
}

PipelineConfig parse_config(const std::string& text) {
  PipelineConfig cfg = PipelineConfig::paper_defaults();
  std::map<std::string, std::map<std::string, std::string>> sections;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad section header");
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    sections[section][trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }

  auto get = [&](const std::string& sec, const std::string& key) -> std::optional<std::string> {
    auto s = sections.find(sec);
    if (s == sections.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
  };

  if (auto v = get("group", "modulus")) cfg.modulus = std::stoi(*v);
  if (auto v = get("group", "generators")) cfg.surface_alphabet = Alphabet(*v);
  if (sections.count("rho")) {
    cfg.rho_images.clear();
    for (int g = 0; g < cfg.surface_alphabet.size(); g++) {
      auto v = get("rho", std::string(1, cfg.surface_alphabet.name(g)));
      if (!v) throw std::invalid_argument("config: missing rho image for generator " +
                                          std::string(1, cfg.surface_alphabet.name(g)));
      cfg.rho_images.push_back(parse_group_element(*v, cfg.modulus));
    }
  }
  if (auto v = get("subgroups", "H")) cfg.subgroup_H = parse_element_list(*v, cfg.modulus);
  if (auto v = get("subgroups", "K")) cfg.subgroup_K = parse_element_list(*v, cfg.modulus);
  if (auto v = get("alpha", "word")) cfg.alpha_text = *v;
  if (auto v = get("alpha", "subsurface")) cfg.alpha_subsurface_text = *v;
  if (auto v = get("alpha", "tau_subsurface")) cfg.tau_alpha_subsurface_text = *v;
  if (auto v = get("alpha", "x")) cfg.x_in_surface_text = *v;
  if (sections.count("tau")) {
    cfg.tau_images.clear();
    for (int g = 0; g < cfg.surface_alphabet.size(); g++) {
      auto v = get("tau", std::string(1, cfg.surface_alphabet.name(g)));
      if (!v) throw std::invalid_argument("config: missing tau image for generator " +
                                          std::string(1, cfg.surface_alphabet.name(g)));
      cfg.tau_images.push_back(*v);
    }
  }
  if (auto v = get("metric", "preset")) cfg.metric_preset = *v;
  if (auto v = get("metric", "file")) cfg.metric_preset = *v;
  if (auto v = get("enumeration", "max_b")) cfg.constraints.max_b = std::stoi(*v);
  if (auto v = get("enumeration", "b_surplus")) cfg.constraints.b_surplus = std::stoi(*v);
  if (auto v = get("enumeration", "edge_budget")) cfg.constraints.b_edge_budget = std::stoi(*v);
  if (auto v = get("run", "threads")) cfg.threads = std::stoi(*v);
  return cfg;
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

MetricAssignment load_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open metric file: " + path);
  std::string names;
  std::vector<RationalMat2> mats;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("metric file: expected '<gen> = a b c d' in: " + t);
    std::string gen = trim(t.substr(0, eq));
    if (gen.size() != 1)
      throw std::invalid_argument("metric file: generator must be one letter: " + gen);
    auto entries = split_ws(t.substr(eq + 1));
    if (entries.size() != 4)
      throw std::invalid_argument("metric file: expected four entries for " + gen);
    names += gen;
    mats.push_back(RationalMat2{parse_rational(entries[0]), parse_rational(entries[1]),
                                parse_rational(entries[2]), parse_rational(entries[3])});
  }
  return MetricAssignment(Alphabet(names), std::move(mats));
}

MetricAssignment metric_from_config(const PipelineConfig& cfg) {
  if (cfg.metric_preset == "paper") return paper_metric();
  return load_metric_file(cfg.metric_preset);
}

PipelineContext::PipelineContext(const PipelineConfig& cfg)
    : group(cfg.modulus),
      H(group, cfg.subgroup_H),
      K(group, cfg.subgroup_K),
      rho(group, cfg.surface_alphabet, cfg.rho_images),
      tau(Endomorphism::identity(cfg.surface_alphabet.size())),
      alpha(free_reduce(parse_word(cfg.alpha_text, cfg.surface_alphabet))),
      sub_alphabet("abx"),
      alpha_sub(parse_word(cfg.alpha_subsurface_text, Alphabet("abx"))),
      tau_alpha_sub(parse_word(cfg.tau_alpha_subsurface_text, Alphabet("abx"))),
      rho_sub(group, Alphabet("abx"),
              {cfg.rho_images.at(0), cfg.rho_images.at(1),
               Homomorphism(group, cfg.surface_alphabet, cfg.rho_images)
                   .evaluate(parse_word(cfg.x_in_surface_text, cfg.surface_alphabet))}),
      metric(metric_from_config(cfg)),
      ribbon(RibbonStructure::cut_surface()),
      L(subgroup_generated(group, {rho.evaluate(alpha)})),
      GmodL(L, CosetSide::Left) {
  std::vector<Word> tau_imgs;
  for (const auto& t : cfg.tau_images) tau_imgs.push_back(parse_word(t, cfg.surface_alphabet));
  tau = Endomorphism(std::move(tau_imgs));
}

}  // namespace sunada

#ifndef QRG_CLI_ANALYZE_HPP_
#define QRG_CLI_ANALYZE_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrg/cli/groupspec.hpp"
#include "qrg/group.hpp"
#include "qrg/reptheory.hpp"

namespace qrg::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qrg/1";

struct AnalysisReport {
  std::string spec;
  std::size_t order = 0;
  std::size_t num_classes = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t cosocle_order = 0;
  std::size_t cosocle_classes = 0;
  bool perfect = false;
  std::vector<std::uint64_t> degrees;
  std::uint64_t degree = kInfiniteDegree;      // D(G)
  std::optional<std::size_t> min_normal_index;  // none for the trivial group
};

inline AnalysisReport analyze(const GroupSpec& spec, const Caps& caps = kDefaultCaps) {
  auto g = build(spec, caps);
  AnalysisReport r;
  r.spec = render(spec);
  r.order = g->order();
  r.num_classes = g->num_classes();
  for (const auto& c : g->classes()) r.class_sizes.push_back(c.size);
  auto cos = cosocle(*g, caps);
  r.cosocle_order = cos.order;
  r.cosocle_classes = cos.num_classes();
  r.perfect = is_perfect(*g);
  auto cd = character_degrees(*g, caps);
  r.degrees = cd.degrees;
  r.degree = quasirandom_degree(cd);
  if (!g->is_trivial()) r.min_normal_index = min_normal_index(*g, caps);
  return r;
}

inline Json degree_json(std::uint64_t d) {
  return d == kInfiniteDegree ? Json("inf") : Json(d);
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["classes"] = r.num_classes;
  j["class_sizes"] = r.class_sizes;
  j["cosocle_order"] = r.cosocle_order;
  j["cosocle_classes"] = r.cosocle_classes;
  j["perfect"] = r.perfect;
  j["degrees"] = r.degrees;
  j["D"] = degree_json(r.degree);
  j["min_normal_index"] = r.min_normal_index ? Json(*r.min_normal_index) : Json(nullptr);
  j["trivial"] = r.order == 1;
  return j;
}

//! One "key<TAB>value" line per scalar field, arrays space separated.
inline std::string to_tsv(const Json& j) {
  std::string out;
  for (const auto& [k, v] : j.items()) {
    out += k;
    out += '\t';
    if (v.is_array()) {
      bool first = true;
      for (const auto& x : v) {
        if (!first) out += ' ';
        first = false;
        out += x.is_string() ? x.get<std::string>() : x.dump();
      }
    } else if (v.is_string()) {
      out += v.get<std::string>();
    } else {
      out += v.dump();
    }
    out += '\n';
  }
  return out;
}

}  // namespace qrg::cli

#endif  // QRG_CLI_ANALYZE_HPP_

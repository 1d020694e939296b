#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gw {

// Symbolic homology class on a Deligne-Mumford moduli space. The only built-in
// relation is the cross-ratio identification on the four-pointed genus-zero
// space: its three boundary classes and the point class coincide.
class DMClass {
 public:
  enum class Kind { Pt, Fundamental, Section, FtPullbackPD, Split, GenusReduce };

  static DMClass pt();
  static DMClass fundamental(int g, int k);
  static DMClass section(int i, DMClass inner);
  static DMClass ft_pullback_pd(DMClass inner);
  // subset = sorted 1-based labels carried by the first branch.
  static DMClass split(std::vector<int> subset, DMClass b0, DMClass b1);
  static DMClass genus_reduce(DMClass inner);

  Kind kind() const { return kind_; }
  int g() const { return g_; }
  int k() const { return k_; }
  int section_index() const { return i_; }
  const std::vector<int>& subset() const { return subset_; }
  const DMClass& child(size_t idx) const { return children_.at(idx); }
  size_t child_count() const { return children_.size(); }

  int degree() const;

  // Canonical stored form under the built-in relations. The ambient signature
  // (g, k) of the moduli space the class lives on decides whether the
  // four-pointed boundary identification applies.
  DMClass canonical(int ambient_g, int ambient_k) const;

  // Stable serialization; equal strings <=> equal stored symbols.
  std::string to_string() const;
  bool operator==(const DMClass& o) const { return to_string() == o.to_string(); }
  bool operator!=(const DMClass& o) const { return !(*this == o); }

  nlohmann::ordered_json to_json() const;
  static DMClass from_json(const nlohmann::json& j);

 private:
  DMClass() = default;
  Kind kind_ = Kind::Pt;
  int g_ = 0, k_ = 0, i_ = 0;
  std::vector<int> subset_;
  std::vector<DMClass> children_;
};

}  // namespace gw

#include "gw/dmclass.hpp"

#include <sstream>

namespace gw {

DMClass DMClass::pt() {
  DMClass c;
  c.kind_ = Kind::Pt;
  return c;
}

DMClass DMClass::fundamental(int g, int k) {
  if (g < 0 || k < 0) throw std::invalid_argument("fundamental: negative signature");
  DMClass c;
  c.kind_ = Kind::Fundamental;
  c.g_ = g;
  c.k_ = k;
  return c;
}

DMClass DMClass::section(int i, DMClass inner) {
  if (i < 1) throw std::invalid_argument("section: label must be >= 1");
  DMClass c;
  c.kind_ = Kind::Section;
  c.i_ = i;
  c.children_.push_back(std::move(inner));
  return c;
}

DMClass DMClass::ft_pullback_pd(DMClass inner) {
  DMClass c;
  c.kind_ = Kind::FtPullbackPD;
  c.children_.push_back(std::move(inner));
  return c;
}

DMClass DMClass::split(std::vector<int> subset, DMClass b0, DMClass b1) {
  for (size_t i = 1; i < subset.size(); ++i)
    if (subset[i - 1] >= subset[i])
      throw std::invalid_argument("split: subset must be strictly increasing");
  DMClass c;
  c.kind_ = Kind::Split;
  c.subset_ = std::move(subset);
  c.children_.push_back(std::move(b0));
  c.children_.push_back(std::move(b1));
  return c;
}

DMClass DMClass::genus_reduce(DMClass inner) {
  DMClass c;
  c.kind_ = Kind::GenusReduce;
  c.children_.push_back(std::move(inner));
  return c;
}

int DMClass::degree() const {
  switch (kind_) {
    case Kind::Pt:
      return 0;
    case Kind::Fundamental:
      return 6 * g_ - 6 + 2 * k_;
    case Kind::Section:       // s_i pushforward from the (k-1)-pointed space
      return children_[0].degree();
    case Kind::FtPullbackPD:  // PD(ft^* PD(beta)): dim raised by the fiber
      return children_[0].degree() + 2;
    case Kind::Split:
      return children_[0].degree() + children_[1].degree();
    case Kind::GenusReduce:
      return children_[0].degree();
  }
  return 0;
}

DMClass DMClass::canonical(int ambient_g, int ambient_k) const {
  DMClass c = *this;
  // Children live on their own (smaller) moduli; only the context-free
  // reduction applies to them.
  for (DMClass& ch : c.children_) ch = ch.canonical(-1, -1);
  if (c.kind_ == Kind::Fundamental && c.g_ == 0 && c.k_ == 3) return pt();
  // Cross-ratio relation: every boundary point-class of the four-pointed
  // genus-zero space is the point class.
  if (c.kind_ == Kind::Split && ambient_g == 0 && ambient_k == 4 &&
      c.children_[0].degree() == 0 && c.children_[1].degree() == 0)
    return pt();
  return c;
}

std::string DMClass::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Pt:
      os << "pt";
      break;
    case Kind::Fundamental:
      os << "F(" << g_ << "," << k_ << ")";
      break;
    case Kind::Section:
      os << "s" << i_ << "[" << children_[0].to_string() << "]";
      break;
    case Kind::FtPullbackPD:
      os << "ft*[" << children_[0].to_string() << "]";
      break;
    case Kind::Split: {
      os << "split{";
      for (size_t i = 0; i < subset_.size(); ++i) os << (i ? "," : "") << subset_[i];
      os << "}[" << children_[0].to_string() << ";" << children_[1].to_string() << "]";
      break;
    }
    case Kind::GenusReduce:
      os << "gr[" << children_[0].to_string() << "]";
      break;
  }
  return os.str();
}

nlohmann::ordered_json DMClass::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Kind::Pt:
      j["type"] = "pt";
      break;
    case Kind::Fundamental:
      j["type"] = "fundamental";
      j["g"] = g_;
      j["k"] = k_;
      break;
    case Kind::Section:
      j["type"] = "section";
      j["i"] = i_;
      j["inner"] = children_[0].to_json();
      break;
    case Kind::FtPullbackPD:
      j["type"] = "ft_pullback_pd";
      j["inner"] = children_[0].to_json();
      break;
    case Kind::Split:
      j["type"] = "split";
      j["subset"] = subset_;
      j["b0"] = children_[0].to_json();
      j["b1"] = children_[1].to_json();
      break;
    case Kind::GenusReduce:
      j["type"] = "genus_reduce";
      j["inner"] = children_[0].to_json();
      break;
  }
  return j;
}

DMClass DMClass::from_json(const nlohmann::json& j) {
  std::string t = j.at("type").get<std::string>();
  if (t == "pt") return pt();
  if (t == "fundamental")
    return fundamental(j.at("g").get<int>(), j.at("k").get<int>());
  if (t == "section") return section(j.at("i").get<int>(), from_json(j.at("inner")));
  if (t == "ft_pullback_pd") return ft_pullback_pd(from_json(j.at("inner")));
  if (t == "split")
    return split(j.at("subset").get<std::vector<int>>(), from_json(j.at("b0")),
                 from_json(j.at("b1")));
  if (t == "genus_reduce") return genus_reduce(from_json(j.at("inner")));
  throw std::invalid_argument("unknown DM class type: " + t);
}

}  // namespace gw

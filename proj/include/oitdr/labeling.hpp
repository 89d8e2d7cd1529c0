#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oitdr/graph.hpp"

namespace oitdr {

using Label = std::uint8_t;

/// Total assignment V -> {0,1,2,3}.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Label> labels);
  Labeling(std::initializer_list<int> labels);
  /// Constant labeling of the given order.
  static Labeling constant(int order, Label value);

  int order() const { return static_cast<int>(labels_.size()); }
  Label operator[](Vertex v) const { return labels_[v]; }
  void set(Vertex v, Label value);
  std::span<const Label> labels() const { return labels_; }

  /// Sizes of the classes V0..V3.
  std::array<int, 4> class_sizes() const;

  bool operator==(const Labeling&) const = default;
  auto operator<=>(const Labeling&) const = default;

 private:
  std::vector<Label> labels_;
};

/// Sum of all labels.
long long weight(const Labeling& f);

/// {"n": <int>, "labels": [...]}
std::string labeling_to_json(const Labeling& f);
Labeling labeling_from_json(std::string_view text);

}  // namespace oitdr

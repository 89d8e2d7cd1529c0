#include "oitdr/labeling.hpp"

#include <json.hpp>

#include <numeric>

namespace oitdr {

namespace {

void require_label(long long value) {
  if (value < 0 || value > 3) {
    throw PreconditionError("label " + std::to_string(value) + " outside {0,1,2,3}");
  }
}

}  // namespace

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (Label l : labels_) require_label(l);
}

Labeling::Labeling(std::initializer_list<int> labels) {
  labels_.reserve(labels.size());
  for (int l : labels) {
    require_label(l);
    labels_.push_back(static_cast<Label>(l));
  }
}

Labeling Labeling::constant(int order, Label value) {
  return Labeling(std::vector<Label>(order, value));
}

void Labeling::set(Vertex v, Label value) {
  require_label(value);
  labels_.at(v) = value;
}

std::array<int, 4> Labeling::class_sizes() const {
  std::array<int, 4> sizes{};
  for (Label l : labels_) ++sizes[l];
  return sizes;
}

long long weight(const Labeling& f) {
  auto labels = f.labels();
  return std::accumulate(labels.begin(), labels.end(), 0LL);
}

std::string labeling_to_json(const Labeling& f) {
  nlohmann::ordered_json doc;
  doc["n"] = f.order();
  doc["labels"] = std::vector<int>(f.labels().begin(), f.labels().end());
  return doc.dump();
}

Labeling labeling_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw ParseError(std::string("labeling JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array()) {
    throw ParseError("labeling JSON: expected an object with a \"labels\" array");
  }
  std::vector<Label> labels;
  for (const auto& entry : doc["labels"]) {
    if (!entry.is_number_integer()) throw ParseError("labeling JSON: labels must be integers");
    auto value = entry.get<long long>();
    if (value < 0 || value > 3) throw ParseError("labeling JSON: label outside {0,1,2,3}");
    labels.push_back(static_cast<Label>(value));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(labels.size())) {
      throw ParseError("labeling JSON: \"n\" does not match the number of labels");
    }
  }
  return Labeling(std::move(labels));
}

}  // namespace oitdr

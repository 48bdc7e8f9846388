/*
 * Copyright 2026 The VPCME Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vpcme/model_io.hpp"

#include <fstream>
#include <string>

#include "json.hpp"
#include "vpcme/errors.hpp"

namespace vpcme {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "vpcme.model/1";

ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

Eigen::MatrixXd matrix_from_json(const ordered_json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) throw ParseError("model matrix row count mismatch");
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = data.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("model matrix column count mismatch");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

ordered_json labels_to_json(const std::vector<LabelSet>& labels) {
  ordered_json out = ordered_json::array();
  for (const auto& row : labels) {
    std::string bits;
    for (bool b : row) bits.push_back(b ? '1' : '0');
    out.push_back(std::move(bits));
  }
  return out;
}

std::vector<LabelSet> labels_from_json(const ordered_json& j) {
  std::vector<LabelSet> out;
  for (const auto& row : j) {
    const auto bits = row.get<std::string>();
    LabelSet set(bits.size(), false);
    for (std::size_t l = 0; l < bits.size(); ++l) {
      if (bits[l] != '0' && bits[l] != '1') throw ParseError("model label row is not a 0/1 string");
      set[l] = bits[l] == '1';
    }
    out.push_back(std::move(set));
  }
  return out;
}

ordered_json config_to_json(const VpcmeConfig& c) {
  ordered_json j = {{"ensemble_size", c.ensemble_size}, {"theta", c.theta},
                    {"k_neighbors", c.k_neighbors},     {"smoothing", c.smoothing},
                    {"target_must", nullptr},          {"target_cannot", nullptr},
                    {"seed", c.seed},                   {"boosting_enabled", c.boosting_enabled}};
  if (c.target_must) j["target_must"] = *c.target_must;
  if (c.target_cannot) j["target_cannot"] = *c.target_cannot;
  return j;
}

VpcmeConfig config_from_json(const ordered_json& j) {
  VpcmeConfig c;
  c.ensemble_size = j.at("ensemble_size").get<std::size_t>();
  c.theta = j.at("theta").get<double>();
  c.k_neighbors = j.at("k_neighbors").get<std::size_t>();
  c.smoothing = j.at("smoothing").get<double>();
  if (!j.at("target_must").is_null()) c.target_must = j.at("target_must").get<std::size_t>();
  if (!j.at("target_cannot").is_null()) c.target_cannot = j.at("target_cannot").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.boosting_enabled = j.at("boosting_enabled").get<bool>();
  return c;
}

}  // namespace

void write_model(const VpcmeModel& model, std::ostream& out) {
  ordered_json members = ordered_json::array();
  for (const auto& m : model.members) {
    const auto& p = m.projection;
    const auto& c = m.classifier;
    ordered_json eigenvalues = ordered_json::array();
    for (Eigen::Index i = 0; i < p.eigenvalues.size(); ++i) eigenvalues.push_back(p.eigenvalues(i));
    members.push_back({
        {"projection",
         {{"w", matrix_to_json(p.w)},
          {"eigenvalues", std::move(eigenvalues)},
          {"scaling_r", p.scaling_r},
          {"objective", p.objective}}},
        {"mlknn",
         {{"k_neighbors", c.k_neighbors},
          {"smoothing", c.smoothing},
          {"prior_pos", c.prior_pos},
          {"freq_pos", c.freq_pos},
          {"freq_neg", c.freq_neg},
          {"train_points", matrix_to_json(c.train_points)},
          {"train_labels", labels_to_json(c.train_labels)}}},
    });
  }
  ordered_json log = ordered_json::array();
  for (const auto& it : model.training_log) {
    log.push_back({{"error_rate", it.error_rate},
                   {"reduced_dim", it.reduced_dim},
                   {"must_count", it.must_count},
                   {"cannot_count", it.cannot_count}});
  }
  const ordered_json doc = {
      {"schema", kSchema},
      {"method", std::string(method_name(model.method))},
      {"feature_count", model.feature_count},
      {"label_count", model.label_count},
      {"config", config_to_json(model.config)},
      {"training_log", std::move(log)},
      {"members", std::move(members)},
  };
  out << doc.dump() << '\n';
}

VpcmeModel read_model(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != kSchema) throw ParseError("unsupported model schema");
    VpcmeModel model;
    model.method = parse_method(doc.at("method").get<std::string>());
    model.feature_count = doc.at("feature_count").get<std::size_t>();
    model.label_count = doc.at("label_count").get<std::size_t>();
    model.config = config_from_json(doc.at("config"));
    for (const auto& it : doc.at("training_log")) {
      model.training_log.push_back({it.at("error_rate").get<double>(), it.at("reduced_dim").get<std::size_t>(),
                                    it.at("must_count").get<std::size_t>(),
                                    it.at("cannot_count").get<std::size_t>()});
    }
    for (const auto& mj : doc.at("members")) {
      EnsembleMember member;
      const auto& pj = mj.at("projection");
      member.projection.w = matrix_from_json(pj.at("w"));
      const auto values = pj.at("eigenvalues").get<std::vector<double>>();
      member.projection.eigenvalues = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
      member.projection.scaling_r = pj.at("scaling_r").get<double>();
      member.projection.objective = pj.at("objective").get<double>();

      const auto& cj = mj.at("mlknn");
      auto& c = member.classifier;
      c.k_neighbors = cj.at("k_neighbors").get<std::size_t>();
      c.smoothing = cj.at("smoothing").get<double>();
      c.prior_pos = cj.at("prior_pos").get<std::vector<double>>();
      c.freq_pos = cj.at("freq_pos").get<std::vector<std::vector<std::size_t>>>();
      c.freq_neg = cj.at("freq_neg").get<std::vector<std::vector<std::size_t>>>();
      c.train_points = matrix_from_json(cj.at("train_points"));
      c.train_labels = labels_from_json(cj.at("train_labels"));

      if (member.projection.input_dim() != model.feature_count ||
          c.dim() != member.projection.reduced_dim() || c.label_count() != model.label_count ||
          c.train_labels.size() != static_cast<std::size_t>(c.train_points.rows())) {
        throw ParseError("model member has inconsistent dimensions");
      }
      model.members.push_back(std::move(member));
    }
    if (model.members.empty()) throw ParseError("model has no members");
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model file: ") + e.what());
  }
}

void save_model(const VpcmeModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  write_model(model, out);
}

VpcmeModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_model(in);
}

}  // namespace vpcme

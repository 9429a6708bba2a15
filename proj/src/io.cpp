// Copyright 2026 The Hyperslice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperslice/io.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace hyperslice {

Json to_json(const Quat& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(to_json(v[k]));
  return out;
}

Json to_json(const MultivectorHQ& m) {
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Quat& c = m[static_cast<BladeMask>(k)];
    if (c == Quat()) continue;
    coeffs[blade_key(static_cast<BladeMask>(k))] = to_json(c);
  }
  return Json{{"schema", kMultivectorSchema}, {"n", m.dim()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const QMat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"schema", kMatrixSchema}, {"n", m.rows()}, {"rows", std::move(rows)}};
}

Json to_json(const Tolerances& t) {
  return Json{{"step", t.step}, {"tol_ok", t.tol_ok}, {"tol_bad", t.tol_bad}};
}

namespace {

Json side_json(const SideReport& s) {
  const char* status = s.accepted ? "accepted" : s.rejected ? "rejected" : "indeterminate";
  Json out{{"max_residual", s.max_residual}, {"status", status}};
  if (s.witness.size() > 0) {
    out["witness_point"] = to_json(s.witness);
    out["witness_variable"] = s.witness_h;
  }
  return out;
}

}  // namespace

Json to_json(const RegularityVerdict& v) {
  // The witness is the worst sample of the side that failed (or of the
  // left side when both pass).
  const SideReport& worst =
      v.right.max_residual > v.left.max_residual ? v.right : v.left;
  Json out{{"schema", kVerdictSchema},
           {"component", v.component},
           {"classification", to_string(v.classification)},
           {"side_left_residual", v.left.max_residual},
           {"side_right_residual", v.right.max_residual},
           {"left", side_json(v.left)},
           {"right", side_json(v.right)}};
  out["witness_point"] = worst.witness.size() > 0 ? to_json(worst.witness) : Json();
  out["samples"] = v.samples;
  out["failed_samples"] = v.failed_samples;
  out["seed"] = v.seed;
  out["tolerances"] = to_json(v.tolerances);
  return out;
}

Json to_json(const AtlasReport& r) {
  Json roundtrip = Json::array();
  for (double x : r.chart_roundtrip) roundtrip.push_back(x);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(
        {{"from", p.from}, {"to", p.to}, {"residual", p.max_residual}, {"samples", p.samples}});
  }
  Json triples = Json::array();
  for (const auto& t : r.triples) {
    triples.push_back({{"charts", {t.i, t.j, t.k}},
                       {"residual", t.max_residual},
                       {"samples", t.samples}});
  }
  Json transitions = Json::array();
  for (const auto& t : r.transitions) {
    transitions.push_back(
        {{"from", t.from}, {"to", t.to}, {"component", t.component}, {"verdict", to_json(t.verdict)}});
  }
  Json tol = to_json(r.tolerances);
  tol["identity"] = r.identity_tol;
  return Json{{"schema", kAtlasSchema},
              {"atlas", r.atlas},
              {"chart_roundtrip", std::move(roundtrip)},
              {"pairs", std::move(pairs)},
              {"triples", std::move(triples)},
              {"transitions", std::move(transitions)},
              {"max_pair_residual", r.max_pair_residual()},
              {"max_triple_residual", r.max_triple_residual()},
              {"consistent", r.consistent()},
              {"all_regular", r.all_regular()},
              {"seed", r.seed},
              {"tolerances", std::move(tol)}};
}

Json to_json(const ConnectedSumReport& r) {
  Json comps = Json::array();
  for (const auto& v : r.components) comps.push_back(to_json(v));
  return Json{{"n", r.n},         {"chart", r.chart + 1},       {"max_residual", r.max_residual},
              {"samples", r.samples}, {"components", std::move(comps)}, {"seed", r.seed}};
}

Json to_json(const GrassmannReport& r) {
  Json comps = Json::array();
  for (const auto& v : r.components) comps.push_back(to_json(v));
  return Json{{"components", std::move(comps)},
              {"any_neither", r.any_neither()},
              {"failing_residual", r.failing_residual()}};
}

Json to_json(const FreenessReport& r) {
  return Json{{"max_length", r.max_length},
              {"words_checked", r.words_checked},
              {"identity_words", r.identity_words},
              {"points", r.points},
              {"min_displacement", r.min_displacement},
              {"closest_word", r.closest_word}};
}

Quat quaternion_from_json(const Json& j) {
  if (j.is_number()) return Quat(j.get<double>());
  if (j.is_array() && j.size() == 4 &&
      std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number(); })) {
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
  }
  throw DomainError("expected a quaternion [w, x, y, z] or a real number");
}

QMat matrix_from_json(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("rows")) throw DomainError("matrix document has no \"rows\" field");
    rows = &j.at("rows");
  }
  if (!rows->is_array() || rows->empty()) throw DomainError("matrix rows must be a nonempty array");
  const std::size_t cols = rows->front().is_array() ? rows->front().size() : 0;
  if (cols == 0) throw DomainError("matrix rows must be nonempty arrays");
  QMat m(static_cast<Eigen::Index>(rows->size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows->size(); ++r) {
    const Json& row = (*rows)[r];
    if (!row.is_array() || row.size() != cols) throw DomainError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = quaternion_from_json(row[c]);
    }
  }
  if (j.is_object() && j.contains("n") && j.at("n") != Json(m.rows())) {
    throw DomainError("matrix \"n\" does not match the number of rows");
  }
  return m;
}

MultivectorHQ multivector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw DomainError("multivector document needs an integer \"n\"");
  }
  MultivectorHQ m(j.at("n").get<int>());
  if (!j.contains("coeffs")) return m;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') {
      throw DomainError("bad blade key " + key);
    }
    BladeMask mask = 0;
    const std::string body = key.substr(1, key.size() - 2);
    const char* p = body.data();
    const char* end = p + body.size();
    while (p < end) {
      int h = 0;
      const auto [next, ec] = std::from_chars(p, end, h);
      if (ec != std::errc() || h < 1 || h > m.dim()) throw DomainError("bad blade key " + key);
      mask |= variable_bit(h);
      p = next;
      if (p < end && *p == ',') ++p;
    }
    m[mask] = quaternion_from_json(value);
  }
  return m;
}

}  // namespace hyperslice

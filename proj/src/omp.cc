// Copyright 2026 The SINR Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "sinr/omp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sinr/errors.h"
#include "sinr/parallel.h"

namespace sinr {
namespace {

// Vectors per correlation product. Fixed so that the floating point
// summation order, and hence every tie-break, is independent of threading.
constexpr int kChunk = 64;

}  // namespace

SparseCode SparseCode::Make(int k1, int k2, std::vector<uint32_t> indices,
                            std::vector<double> values, bool rank_deficient) {
  const int s = static_cast<int>(indices.size());
  if (values.size() != indices.size()) {
    throw InvalidArgument("sparse code has " + std::to_string(s) +
                          " indices but " + std::to_string(values.size()) +
                          " values");
  }
  if (s < 1) throw InvalidArgument("sparse code needs at least one entry");
  if (k2 < 1 || k2 > kMaxAtoms) {
    throw InvalidArgument("dictionary width " + std::to_string(k2) +
                          " does not fit 16-bit indices");
  }
  if (2 * static_cast<int64_t>(s) >= k1) {
    throw BudgetError("sparse code violates 2s < k1 (s=" + std::to_string(s) +
                      ", k1=" + std::to_string(k1) + ")");
  }
  for (int t = 0; t < s; ++t) {
    if (indices[t] >= static_cast<uint32_t>(k2)) {
      throw InvalidArgument("atom index " + std::to_string(indices[t]) +
                            " out of range for k2=" + std::to_string(k2));
    }
    if (t > 0 && indices[t] <= indices[t - 1]) {
      throw InvalidArgument("sparse code indices must be strictly increasing");
    }
  }
  SparseCode code;
  code.k1_ = k1;
  code.k2_ = k2;
  code.indices_ = std::move(indices);
  code.values_ = std::move(values);
  code.rank_deficient_ = rank_deficient;
  return code;
}

OmpPath::OmpPath(const Dictionary& dict, const Eigen::MatrixXd& targets)
    : dict_(dict), targets_(targets), residuals_(targets) {
  if (targets.rows() != dict.k1()) {
    throw InvalidArgument("target length " + std::to_string(targets.rows()) +
                          " does not match dictionary k1=" +
                          std::to_string(dict.k1()));
  }
  if (!targets.allFinite()) {
    throw InvalidArgument("OMP targets must be finite");
  }
  states_.resize(targets.cols());
  for (Eigen::Index v = 0; v < targets.cols(); ++v) {
    VectorState& st = states_[v];
    st.norm = targets.col(v).norm();
    st.zero = !(st.norm > 0.0);
    st.history.push_back(st.norm);
  }
}

int OmpPath::atoms(int v) const {
  return static_cast<int>(states_[v].selected.size());
}

Eigen::MatrixXd OmpPath::Selected(int v, int t) const {
  const VectorState& st = states_[v];
  Eigen::MatrixXd a(dict_.k1(), t);
  for (int i = 0; i < t; ++i) a.col(i) = dict_.atom(st.selected[i]);
  return a;
}

Eigen::VectorXd OmpPath::Coefficients(int v, int t) const {
  const VectorState& st = states_[v];
  t = std::min(t, atoms(v));
  if (t == 0) return Eigen::VectorXd();
  const Eigen::Map<const Eigen::VectorXd> corr(st.target_corr.data(), t);
  Eigen::VectorXd coef = st.chol.Solve(corr);
  const Eigen::MatrixXd a = Selected(v, t);
  const Eigen::VectorXd residual = targets_.col(v) - a * coef;
  coef += st.chol.Solve(a.transpose() * residual);
  return coef;
}

Eigen::VectorXd OmpPath::Residual(int v, int t) const {
  t = std::min(t, atoms(v));
  if (t == 0) return targets_.col(v);
  return targets_.col(v) - Selected(v, t) * Coefficients(v, t);
}

double OmpPath::RelativeError(int v, int s) const {
  const VectorState& st = states_[v];
  if (st.zero) return 0.0;
  const int t = std::min(s, atoms(v));
  return st.history[t] / st.norm;
}

double OmpPath::WorstRelativeError(int s) const {
  double worst = 0.0;
  for (int v = 0; v < vector_count(); ++v) {
    worst = std::max(worst, RelativeError(v, s));
  }
  return worst;
}

void OmpPath::Step() {
  const int n = vector_count();
  const int chunks = (n + kChunk - 1) / kChunk;
  ParallelFor(chunks, [&](int c) {
    StepChunk(c * kChunk, std::min(n, (c + 1) * kChunk));
  });
  ++steps_;
}

void OmpPath::StepChunk(int first, int last) {
  const Eigen::MatrixXd& a = dict_.atoms();
  const int k2 = dict_.k2();
  const Eigen::MatrixXd corr =
      a.transpose() * residuals_.middleCols(first, last - first);
  constexpr double kExcluded = std::numeric_limits<double>::quiet_NaN();
  for (int v = first; v < last; ++v) {
    VectorState& st = states_[v];
    if (st.zero || st.rank_deficient) continue;
    const int t = atoms(v);
    if (t >= k2) continue;
    Eigen::VectorXd c = corr.col(v - first);
    for (int j : st.selected) c[j] = kExcluded;
    int best = -1;
    double best_abs = -1.0;
    for (int j = 0; j < k2; ++j) {
      const double m = std::abs(c[j]);
      if (m > best_abs) {
        best_abs = m;
        best = j;
      }
    }
    if (best < 0) continue;
    const auto atom = dict_.atom(best);
    Eigen::VectorXd cross(t);
    for (int i = 0; i < t; ++i) cross[i] = dict_.atom(st.selected[i]).dot(atom);
    if (!st.chol.Append(cross, atom.squaredNorm())) {
      st.rank_deficient = true;
      continue;
    }
    st.selected.push_back(best);
    st.target_corr.push_back(atom.dot(targets_.col(v)));
    const Eigen::VectorXd r = Residual(v, t + 1);
    residuals_.col(v) = r;
    st.history.push_back(r.norm());
  }
}

SparseCode OmpPath::Code(int v, int s) const {
  const VectorState& st = states_[v];
  const int k1 = dict_.k1();
  const int k2 = dict_.k2();
  if (st.zero) {
    std::vector<uint32_t> idx(s);
    for (int t = 0; t < s; ++t) idx[t] = static_cast<uint32_t>(t);
    return SparseCode::Make(k1, k2, std::move(idx), std::vector<double>(s));
  }
  const int t = std::min(s, atoms(v));
  const Eigen::VectorXd coef = Coefficients(v, t);
  std::vector<int> order(t);
  for (int i = 0; i < t; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return st.selected[x] < st.selected[y];
  });
  std::vector<uint32_t> idx(t);
  std::vector<double> val(t);
  for (int i = 0; i < t; ++i) {
    idx[i] = static_cast<uint32_t>(st.selected[order[i]]);
    val[i] = coef[order[i]];
  }
  return SparseCode::Make(k1, k2, std::move(idx), std::move(val),
                          st.rank_deficient && t < s);
}

SparseCode Omp(const Dictionary& dict, const Eigen::VectorXd& w, int s) {
  if (s < 1) throw InvalidArgument("OMP sparsity must be at least 1");
  if (2 * static_cast<int64_t>(s) >= dict.k1()) {
    throw BudgetError("OMP sparsity s=" + std::to_string(s) +
                      " violates 2s < k1=" + std::to_string(dict.k1()));
  }
  if (!(w.norm() > 0.0)) {
    throw InvalidArgument("OMP target must be non-zero");
  }
  OmpPath path(dict, w);
  for (int t = 0; t < s && !path.rank_deficient(0); ++t) path.Step();
  return path.Code(0, s);
}

Eigen::VectorXd Reconstruct(const Dictionary& dict, const SparseCode& code) {
  if (code.k2() != dict.k2() || code.k1() != dict.k1()) {
    throw InvalidArgument("sparse code shape (" + std::to_string(code.k1()) +
                          ", " + std::to_string(code.k2()) +
                          ") does not match the dictionary");
  }
  // Scalar loop: decoded weights must not depend on the SIMD width.
  const int k1 = dict.k1();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(k1);
  for (int t = 0; t < code.s(); ++t) {
    const uint32_t j = code.indices()[t];
    if (j >= static_cast<uint32_t>(dict.k2())) {
      throw InvalidArgument("atom index out of range");
    }
    const double value = code.values()[t];
    const double* atom = dict.atoms().col(static_cast<int>(j)).data();
    for (int i = 0; i < k1; ++i) w[i] += value * atom[i];
  }
  return w;
}

}  // namespace sinr

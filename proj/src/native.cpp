// Copyright 2026 The tnload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "tnload/circuit.hpp"
#include "tnload/errors.hpp"

namespace tnload {

namespace {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

constexpr double kPi = std::numbers::pi;
constexpr double kRecomposeTol = 1e-8;

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, cd(0, -1), cd(0, 1), 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 rz(double t) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, -t / 2);
  m(1, 1) = std::polar(1.0, t / 2);
  return m;
}

Mat2 ry(double t) {
  Mat2 m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Mat2 rx(double t) {
  return std::cos(t / 2) * Mat2::Identity() -
         cd(0, 1) * std::sin(t / 2) * pauli_x();
}

Mat4 magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  const cd i(0, 1);
  Mat4 m;
  m << 1, i, 0, 0,  //
      0, 0, i, 1,   //
      0, 0, i, -1,  //
      1, -i, 0, 0;
  return s * m;
}

Mat4 cx_high_to_low() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

struct Kak {
  Mat4 k1;
  Mat4 k2;
  std::array<double, 3> coeffs;  // XX, YY, ZZ
};

// U = k1 * exp(i (a XX + b YY + c ZZ)) * k2 up to global phase.
Kak real_kak(const Eigen::Matrix4d& u) {
  const Mat4 m = magic_basis();
  const Mat4 um = m.adjoint() * u.cast<cd>() * m;
  const Mat4 p = um.transpose() * um;

  Eigen::Matrix4d o2;
  Eigen::Vector4cd lambda;
  double best = INFINITY;
  for (double mix : {0.5772156649, 1.3247179572, -0.7071067812, 2.7182818285}) {
    const Eigen::Matrix4d s = p.real() + mix * p.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(s);
    if (eig.info() != Eigen::Success) continue;
    Eigen::Matrix4d candidate = eig.eigenvectors().transpose();
    if (candidate.determinant() < 0) candidate.row(0) = -candidate.row(0);
    const Mat4 d = candidate.cast<cd>() * p * candidate.transpose().cast<cd>();
    const double off = (d - Mat4(d.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
    if (off < best) {
      best = off;
      o2 = candidate;
      lambda = d.diagonal();
    }
  }
  if (!(best < 1e-9)) throw NumericalFailure("could not diagonalise the gate");

  Eigen::Vector4cd dvec;
  for (int k = 0; k < 4; ++k) dvec(k) = std::sqrt(lambda(k));
  Mat4 o1 = um * o2.transpose().cast<cd>() *
            Eigen::Vector4cd(dvec.cwiseInverse()).asDiagonal();
  if (o1.determinant().real() < 0) {
    dvec(0) = -dvec(0);
    o1.col(0) = -o1.col(0);
  }

  const Mat2 x = pauli_x();
  const Mat2 y = pauli_y();
  const Mat2 z = pauli_z();
  const std::array<Mat4, 3> paulis = {kron(x, x), kron(y, y), kron(z, z)};
  Kak out;
  for (int j = 0; j < 3; ++j) {
    const Eigen::Vector4cd signs = (m.adjoint() * paulis[j] * m).diagonal();
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) acc += std::arg(dvec(k)) * signs(k).real();
    out.coeffs[j] = acc / 4.0;
  }
  out.k1 = m * o1 * m.adjoint();
  out.k2 = m * o2.cast<cd>() * m.adjoint();
  return out;
}

// Rank-one split of a local 4x4 unitary into a (high qubit) and b (low).
std::pair<Mat2, Mat2> split_local(const Mat4& k) {
  Mat4 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          r(2 * i + j, 2 * a + b) = k(2 * i + a, 2 * j + b);
        }
      }
    }
  }
  Eigen::JacobiSVD<Mat4> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double s = std::sqrt(svd.singularValues()(0));
  Mat2 a;
  Mat2 b;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = s * svd.matrixU()(2 * i + j, 0);
      b(i, j) = s * std::conj(svd.matrixV()(2 * i + j, 0));
    }
  }
  return {a, b};
}

// u = phase * RZ(alpha) RY(beta) RZ(gamma).
std::array<double, 3> zyz_angles(const Mat2& u) {
  const double tiny = 1e-12;
  const double sum = std::abs(u(0, 0)) > tiny ? std::arg(u(1, 1) / u(0, 0)) : 0.0;
  const double diff = std::abs(u(1, 0)) > tiny ? std::arg(-u(1, 0) / u(0, 1)) : 0.0;
  const double alpha = (sum + diff) / 2;
  const double gamma = (sum - diff) / 2;
  const Mat2 v = rz(alpha).adjoint() * u * rz(gamma).adjoint();
  const cd unphase = std::polar(
      1.0, -std::arg(std::abs(v(0, 0)) >= std::abs(v(1, 0)) ? v(0, 0) : v(1, 0)));
  const double beta = 2.0 * std::atan2((v(1, 0) * unphase).real(), (v(0, 0) * unphase).real());
  return {alpha, beta, gamma};
}

double distance_to_half_pi_multiple(double x) {
  const double step = kPi / 2;
  return std::abs(x - std::round(x / step) * step);
}

void push_single(std::vector<NativeGate>& out, std::size_t qubit,
                 const Mat2& u) {
  const auto [alpha, beta, gamma] = zyz_angles(u);
  out.push_back({NativeKind::RZ, qubit, 0, gamma});
  out.push_back({NativeKind::RY, qubit, 0, beta});
  out.push_back({NativeKind::RZ, qubit, 0, alpha});
}

}  // namespace

std::vector<NativeGate> so4_to_native(const TwoQubitGate& gate) {
  const Eigen::Matrix4d& u = gate.matrix;
  if (!u.allFinite() || orthogonality_deviation(u) > 1e-8) {
    throw InvalidArgument("gate is not orthogonal");
  }
  if (u.determinant() < 0.0) {
    throw InvalidArgument("gate has determinant -1");
  }
  const Kak kak = real_kak(u);
  const auto& [a, b, c] = kak.coeffs;

  // One interaction coefficient of a real gate is a multiple of pi/2, so its
  // factor is local. The remaining pair is rotated onto (XX, ZZ).
  int zero = 1;
  for (int k : {0, 2}) {
    if (distance_to_half_pi_multiple(kak.coeffs[k]) + 1e-14 <
        distance_to_half_pi_multiple(kak.coeffs[zero])) {
      zero = k;
    }
  }
  const std::array<Mat4, 3> paulis = {kron(pauli_x(), pauli_x()),
                                      kron(pauli_y(), pauli_y()),
                                      kron(pauli_z(), pauli_z())};
  const double z = kak.coeffs[zero];
  const Mat4 local = std::cos(z) * Mat4::Identity() +
                     cd(0, 1) * std::sin(z) * paulis[zero];
  Mat4 w = Mat4::Identity();
  double xx = a;
  double zz = c;
  if (zero == 0) {
    Mat2 s = Mat2::Identity();
    s(1, 1) = cd(0, 1);
    w = kron(s, s);
    xx = b;
  } else if (zero == 2) {
    w = kron(rx(-kPi / 2), rx(-kPi / 2));
    zz = b;
  }
  const Mat4 k1 = kak.k1 * local * w;
  const Mat4 k2 = w.adjoint() * kak.k2;
  const auto [a1, b1] = split_local(k1);
  const auto [a2, b2] = split_local(k2);

  const std::size_t hi = gate.qubit;
  const std::size_t lo = gate.qubit + 1;
  std::vector<NativeGate> out;
  push_single(out, hi, a2);
  push_single(out, lo, b2);
  out.push_back({NativeKind::CX, lo, hi, 0.0});
  push_single(out, hi, rx(-2.0 * xx));
  push_single(out, lo, rz(-2.0 * zz));
  out.push_back({NativeKind::CX, lo, hi, 0.0});
  push_single(out, hi, a1);
  push_single(out, lo, b1);

  const Mat4 recomposed = native_unitary(out, hi);
  const cd overlap = (recomposed.adjoint() * u.cast<cd>()).trace();
  const cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd(1);
  if ((recomposed * phase - u.cast<cd>()).cwiseAbs().maxCoeff() > kRecomposeTol) {
    throw NumericalFailure("native decomposition does not recompose the gate");
  }
  return out;
}

Eigen::Matrix4cd native_unitary(const std::vector<NativeGate>& gates,
                                std::size_t base_qubit) {
  Mat4 total = Mat4::Identity();
  for (const auto& g : gates) {
    Mat4 step;
    if (g.kind == NativeKind::CX) {
      if (g.control == base_qubit && g.target == base_qubit + 1) {
        step = cx_high_to_low();
      } else if (g.control == base_qubit + 1 && g.target == base_qubit) {
        Mat4 m = Mat4::Zero();
        m(0, 0) = m(3, 1) = m(2, 2) = m(1, 3) = 1;
        step = m;
      } else {
        throw InvalidArgument("native gate outside the qubit pair");
      }
    } else {
      const Mat2 r = g.kind == NativeKind::RY ? ry(g.angle) : rz(g.angle);
      if (g.target == base_qubit) {
        step = kron(r, Mat2::Identity());
      } else if (g.target == base_qubit + 1) {
        step = kron(Mat2::Identity(), r);
      } else {
        throw InvalidArgument("native gate outside the qubit pair");
      }
    }
    total = step * total;
  }
  return total;
}

}  // namespace tnload

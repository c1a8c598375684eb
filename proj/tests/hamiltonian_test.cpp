#include "xtalk/hamiltonian.hpp"

#include <gtest/gtest.h>

#include "test_oracles.hpp"

using namespace xtalk;
using xtalk::testing::kron3;

namespace {

double max_diff(const Matrix8& a, const Matrix8& b) { return (a - b).cwiseAbs().maxCoeff(); }

const std::vector<PulseShape> kShapes{PulseShape::Off,    PulseShape::Cosine, PulseShape::Gaussian,
                                      PulseShape::Square, PulseShape::Chirp,  PulseShape::Drag};

}  // namespace

TEST(Coupling, ZeroStrengthIsZero) {
  EXPECT_EQ(build_coupling({Pauli::Y, Pauli::X, 0.0, 0.0}), Matrix8(Matrix8::Zero()));
}

TEST(Coupling, SingleBondMatchesKronecker) {
  const Matrix2 id = Matrix2::Identity();
  const Matrix8 h = build_coupling({Pauli::Z, Pauli::X, 0.5, 0.0});
  EXPECT_EQ(max_diff(h, 0.5 * kron3(pauli(Pauli::Z), pauli(Pauli::X), id)), 0.0);
}

TEST(Coupling, BothBondsShareOperatorPair) {
  const Matrix2 id = Matrix2::Identity();
  const Matrix2 y = pauli(Pauli::Y);
  const Matrix2 x = pauli(Pauli::X);
  const Matrix8 h = build_coupling({Pauli::Y, Pauli::X, 0.5, 0.25});
  EXPECT_LE(max_diff(h, 0.5 * kron3(y, x, id) + 0.25 * kron3(id, y, x)), 1e-15);
  EXPECT_TRUE(is_hermitian(h));
  EXPECT_NEAR(std::abs(h.trace()), 0.0, 1e-15);
}

TEST(Coupling, LinearInStrength) {
  for (auto a : {Pauli::X, Pauli::Y, Pauli::Z}) {
    for (auto b : {Pauli::X, Pauli::Y, Pauli::Z}) {
      const Matrix8 h1 = build_coupling({a, b, 0.3, 0.7});
      const Matrix8 h2 = build_coupling({a, b, 0.6, 1.4});
      EXPECT_LE(max_diff(h2, 2.0 * h1), 1e-15);
    }
  }
}

TEST(Coupling, LabelsAndValidation) {
  EXPECT_EQ(coupling_from_label("zx", 1, 1).label(), "ZX");
  EXPECT_THROW(coupling_from_label("ZXY", 1, 1), ValidationError);
  EXPECT_THROW(coupling_from_label("IX", 1, 1), ValidationError);
  EXPECT_THROW(build_coupling({Pauli::Y, Pauli::X, std::nan(""), 0.0}), ValidationError);
}

TEST(Drive, OffIsZero) {
  const PulseSpec off;
  EXPECT_EQ(build_drive(off, off, 0.4), Matrix8(Matrix8::Zero()));
}

TEST(Drive, SquareOnQ0AtCenter) {
  const PulseSpec sq{PulseShape::Square, 1.0};
  const Matrix2 id = Matrix2::Identity();
  EXPECT_EQ(max_diff(build_drive(sq, PulseSpec{}, 0.5), kron3(pauli(Pauli::X), id, id)), 0.0);
  EXPECT_EQ(build_drive(sq, PulseSpec{}, 0.1), Matrix8(Matrix8::Zero()));
  EXPECT_THROW(build_drive(sq, PulseSpec{}, 1.5), ValidationError);
}

TEST(Hamiltonian, CouplingOnlyIsTimeIndependent) {
  const CouplingSpec c{Pauli::Y, Pauli::X, 0.5, 0.5};
  const PulseSpec off;
  EXPECT_EQ(hamiltonian_at(c, off, off, 0.2), hamiltonian_at(c, off, off, 0.9));
  EXPECT_EQ(hamiltonian_at({Pauli::Y, Pauli::X, 0, 0}, off, off, 0.3), Matrix8(Matrix8::Zero()));
}

TEST(Hamiltonian, ReferenceConfigElementwise) {
  // Y(x)X entries are imaginary, so only the drive part is real symmetric.
  const CouplingSpec c{Pauli::Y, Pauli::X, 0.5, 0.5};
  const PulseSpec p{PulseShape::Cosine, 0.5};
  const Matrix2 id = Matrix2::Identity();
  const Matrix2 x = pauli(Pauli::X);
  const Matrix2 y = pauli(Pauli::Y);
  const Matrix8 expected = 0.5 * kron3(y, x, id) + 0.5 * kron3(id, y, x) +
                           0.5 * kron3(x, id, id) + 0.5 * kron3(id, x, id);
  const Matrix8 h = hamiltonian_at(c, p, p, 0.37);
  EXPECT_LE(max_diff(h, expected), 1e-15);
  EXPECT_TRUE(is_hermitian(h));
  const Matrix8 drive = build_drive(p, p, 0.37);
  EXPECT_EQ(drive.imag().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(max_diff(drive, drive.transpose()), 0.0);
}

TEST(Hamiltonian, HermitianOnGridForEveryShapeAndCoupling) {
  for (auto a : {Pauli::X, Pauli::Y, Pauli::Z}) {
    for (auto b : {Pauli::X, Pauli::Y, Pauli::Z}) {
      for (auto s0 : kShapes) {
        for (auto s1 : kShapes) {
          const PulseSpec p0{s0, 0.8, 1.5, 0.1, 5.0, 0.05};
          const PulseSpec p1{s1, 0.6, -0.5, 0.15, 3.0, 0.2};
          for (int k = 0; k < 50; ++k) {
            const double t = (k + 0.5) / 50.0;
            EXPECT_TRUE(is_hermitian(hamiltonian_at({a, b, 0.5, 0.3}, p0, p1, t)));
          }
        }
      }
    }
  }
}

TEST(Drive, NeverTouchesVictim) {
  const Matrix8 z2 = embed(pauli(Pauli::Z), 2);
  for (auto s0 : kShapes) {
    for (auto s1 : kShapes) {
      const PulseSpec p0{s0, 1.0, 2.0};
      const PulseSpec p1{s1, 0.7, 0.0};
      for (int k = 0; k <= 20; ++k) {
        const Matrix8 d = build_drive(p0, p1, k / 20.0);
        EXPECT_LE(max_diff(d * z2, z2 * d), 1e-12);
      }
    }
  }
}

TEST(Provider, AttackHamiltonianMatchesDirectBuild) {
  const CouplingSpec c{Pauli::Z, Pauli::X, 0.4, 0.6};
  const PulseSpec p0{PulseShape::Drag, 1.0, 0.0, 0.1, 5.0, 0.05};
  const PulseSpec p1{PulseShape::Chirp, 0.5};
  const auto h = attack_hamiltonian(c, p0, p1);
  for (int k = 0; k <= 10; ++k) {
    const double t = k / 10.0;
    EXPECT_EQ(h(t, Approach::Exact), hamiltonian_at(c, p0, p1, t));
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "rydfermi/atomic/quantum_defects.hpp"
#include "rydfermi/common/errors.hpp"

using namespace rydfermi;
using namespace rydfermi::atomic;

TEST(RydbergLevel, AcceptsPhysicalCombinations) {
  EXPECT_NO_THROW(RydbergLevel::make(Species::Rb, 46, 2, 2.5, 2.5));
  EXPECT_NO_THROW(RydbergLevel::make(Species::Rb, 46, 2, 1.5, -1.5));
  EXPECT_NO_THROW(RydbergLevel::make(Species::H, 1, 0, 0.5, -0.5));
}

TEST(RydbergLevel, RejectsInvalidQuantumNumbers) {
  const auto expect_invalid = [](int n, int l, double j, double mj) {
    try {
      RydbergLevel::make(Species::Rb, n, l, j, mj);
      ADD_FAILURE() << "accepted n=" << n << " l=" << l << " j=" << j << " mj=" << mj;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidQuantumNumbers);
    }
  };
  expect_invalid(5, 5, 5.5, 0.5);   // l >= n
  expect_invalid(5, 0, -0.5, 0.5);  // j < 0
  expect_invalid(5, 2, 3.5, 0.5);   // j != l +- 1/2
  expect_invalid(5, 2, 1.5, 2.5);   // |mj| > j
  expect_invalid(5, 2, 1.5, 1.0);   // integer mj
  expect_invalid(0, 0, 0.5, 0.5);
}

TEST(QuantumDefects, MissingEntriesAreHydrogenic) {
  const QuantumDefectTable empty;
  EXPECT_EQ(empty.defect(Species::Rb, 2, HalfInt::from_twice(5)), 0.0);
  EXPECT_EQ(QuantumDefectTable::builtin().defect(Species::Rb, 7, HalfInt::from_twice(15)), 0.0);
  EXPECT_EQ(QuantumDefectTable::builtin().defect(Species::H, 0, HalfInt::from_twice(1)), 0.0);
}

TEST(QuantumDefects, BuiltinMatchesShippedDataFile) {
  const auto file = QuantumDefectTable::load(std::filesystem::path(RYDFERMI_DATA_DIR) / "quantum_defects.dat");
  const auto& builtin = QuantumDefectTable::builtin();
  EXPECT_EQ(file.size(), builtin.size());
  for (auto sp : {Species::Rb, Species::Cs})
    for (int l = 0; l <= 3; ++l)
      for (int tj : {2 * l - 1, 2 * l + 1}) {
        if (tj < 1) continue;
        EXPECT_EQ(file.defect(sp, l, HalfInt::from_twice(tj)), builtin.defect(sp, l, HalfInt::from_twice(tj)));
      }
  EXPECT_DOUBLE_EQ(builtin.defect(Species::Rb, 2, HalfInt::from_twice(5)), 1.34646572);
  EXPECT_DOUBLE_EQ(builtin.defect(Species::Cs, 0, HalfInt::from_twice(1)), 4.0493532);
}

TEST(QuantumDefects, ParsesFractionsDecimalsAndComments) {
  const auto t = QuantumDefectTable::parse("# header\nRb 2 5/2 1.5  # trailing\n\nCs 1 1.5 3.25\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.defect(Species::Rb, 2, HalfInt::from_twice(5)), 1.5);
  EXPECT_EQ(t.defect(Species::Cs, 1, HalfInt::from_twice(3)), 3.25);
}

TEST(QuantumDefects, MalformedRecordsAreConfigErrors) {
  for (const char* text : {"Rb 2 5/2\n", "Xe 0 1/2 1.0\n", "Rb 2 9/2 1.0\n", "Rb 2 5/2 nan\n", "Rb 2 5/2 1 2\n"}) {
    try {
      QuantumDefectTable::parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ConfigInvalid || e.kind() == ErrorKind::InvalidQuantumNumbers) << text;
    }
  }
}

TEST(QuantumDefects, MissingFileIsIoError) {
  try {
    QuantumDefectTable::load("/nonexistent/defects.dat");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
    EXPECT_EQ(exit_code(e.kind()), 4);
  }
}

TEST(LevelEnergy, HydrogenGroundState) {
  EXPECT_DOUBLE_EQ(level_energy(RydbergLevel::make(Species::H, 1, 0, 0.5, 0.5), QuantumDefectTable{}), -0.5);
}

TEST(LevelEnergy, ZeroDefectClosedForm) {
  const double e = level_energy(RydbergLevel::make(Species::Rb, 46, 2, 2.5, 2.5), QuantumDefectTable{});
  EXPECT_NEAR(e, -2.3629e-4, 1e-8);
  EXPECT_DOUBLE_EQ(e, -1.0 / 4232.0);
}

TEST(LevelEnergy, ConfiguredDefect) {
  QuantumDefectTable t;
  t.set(Species::Rb, 2, HalfInt::from_twice(5), 1.34646572);
  const double e = level_energy(RydbergLevel::make(Species::Rb, 46, 2, 2.5, 2.5), t);
  // n* = 44.65353428, E = -1/(2 n*^2)
  EXPECT_NEAR(e, -2.50760038166785e-4, 1e-17);
}

TEST(LevelEnergy, NegativeAndIncreasingInN) {
  const auto& t = QuantumDefectTable::builtin();
  for (auto sp : {Species::H, Species::Rb, Species::Cs}) {
    double previous = -1e300;
    for (int n = 5; n <= 80; ++n) {
      const double e = level_energy(RydbergLevel::make(sp, n, 2, 2.5, 0.5), t);
      EXPECT_LT(e, 0.0);
      EXPECT_GT(e, previous);
      previous = e;
    }
  }
}

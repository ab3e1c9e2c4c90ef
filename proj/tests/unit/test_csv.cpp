#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "scsa/csv.hpp"
#include "scsa/error.hpp"
#include "scsa/signals.hpp"
#include "support/temp_dir.hpp"

namespace scsa {
namespace {

using testing::TempDir;

ErrorKind read_error(const std::filesystem::path& p) {
  try {
    read_signal_csv(p);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << p;
  return ErrorKind::InvalidInput;
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(SignalCsv, RoundTripIsExact) {
  TempDir dir;
  const Signal y = add_white_noise(gaussian_peaks(five_peak_spec(), 256), 5.0, 12);
  write_signal_csv(dir / "y.csv", y);
  const Signal back = read_signal_csv(dir / "y.csv");
  EXPECT_EQ(back.values(), y.values());
  EXPECT_DOUBLE_EQ(back.delta(), y.delta());
  EXPECT_DOUBLE_EQ(back.t0(), y.t0());
}

TEST(SignalCsv, RoundTripFractionalGrid) {
  TempDir dir;
  const Signal y = standard_test_signal(StandardSignal::Doppler, 1000);
  write_signal_csv(dir / "d.csv", y, "doppler");
  EXPECT_EQ(testing::slurp(dir / "d.csv").substr(0, 10), "t,doppler\n");
  const Signal back = read_signal_csv(dir / "d.csv");
  EXPECT_EQ(back.values(), y.values());
  EXPECT_NEAR(back.delta(), 1e-3, 1e-15);
}

TEST(SignalCsv, MalformedInputs) {
  TempDir dir;
  std::string good = "t,y\n";
  for (int i = 0; i < 10; ++i) good += std::to_string(i) + ",1\n";
  EXPECT_NO_THROW(read_signal_csv(dir.write("ok.csv", good)));
  EXPECT_EQ(read_error(dir.write("cell.csv", "t,y\n0,1\n1,abc\n2,1\n3,1\n4,1\n5,1\n6,1\n7,1\n")),
            ErrorKind::MalformedData);
  EXPECT_EQ(read_error(dir.write("cols.csv", "t,y\n0,1,2\n")), ErrorKind::MalformedData);
  EXPECT_EQ(read_error(dir.write("hdr.csv", "ty\n0\n")), ErrorKind::MalformedData);
  EXPECT_EQ(read_error(dir.write("uneven.csv", "t,y\n0,1\n1,1\n2,1\n3.5,1\n4,1\n5,1\n6,1\n7,1\n")),
            ErrorKind::MalformedData);
  EXPECT_EQ(read_error(dir.write("back.csv", "t,y\n7,1\n6,1\n5,1\n4,1\n3,1\n2,1\n1,1\n0,1\n")),
            ErrorKind::MalformedData);
  EXPECT_EQ(read_error(dir.write("short.csv", "t,y\n0,1\n1,2\n")), ErrorKind::InvalidSignal);
  EXPECT_EQ(read_error(dir / "missing.csv"), ErrorKind::Io);
}

TEST(SignalCsv, UnwritablePath) {
  TempDir dir;
  const Signal y = gaussian_peaks(single_peak_spec(), 16);
  try {
    write_signal_csv(dir / "no_such_dir" / "y.csv", y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(TableCsv, WritesHeaderAndRows) {
  TempDir dir;
  write_table_csv(dir / "t.csv", {"a", "b"}, {{"1", "2"}, {"3", "nan"}});
  EXPECT_EQ(testing::slurp(dir / "t.csv"), "a,b\n1,2\n3,nan\n");
}

}  // namespace
}  // namespace scsa

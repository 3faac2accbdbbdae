#pragma once

#include <string>
#include <vector>

namespace lanheat {

/// Temperature history at one probe position. Times in s, temperatures in deg C.
struct TemperatureSeries {
  std::string label;
  double position = 0.0;  // m, substrate surface at 0, substrate at x > 0
  std::vector<double> times;
  std::vector<double> temperatures;

  struct Peak {
    double temperature = 0.0;
    double time = 0.0;
  };
  /// Largest sample (first one on ties). Throws Error on an empty series.
  Peak peak() const;
};

}  // namespace lanheat

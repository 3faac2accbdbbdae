#include "lanheat/series.hpp"

#include "lanheat/errors.hpp"

namespace lanheat {

TemperatureSeries::Peak TemperatureSeries::peak() const {
  if (temperatures.empty()) throw Error("empty temperature series");
  std::size_t best = 0;
  for (std::size_t i = 1; i < temperatures.size(); ++i) {
    if (temperatures[i] > temperatures[best]) best = i;
  }
  return {temperatures[best], times[best]};
}

}  // namespace lanheat

#pragma once

#include <string>
#include <vector>

#include "proxi/record.hpp"

namespace proxi {

// shortest fixed formatting that round-trips doubles (17 significant digits)
std::string g17(double x);

// header a,y,c,w,z,v / a,c,w,z,v; one record per row
std::string dataset_csv(const std::vector<FullRecord>& records);
std::string dataset_csv(const std::vector<ObservedRecord>& records);

struct Dataset {
  bool has_y = false;
  std::vector<FullRecord> full;          // when has_y
  std::vector<ObservedRecord> observed;  // always populated
};

Dataset read_dataset_csv(const std::string& text);

}  // namespace proxi

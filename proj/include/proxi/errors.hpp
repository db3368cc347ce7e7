#pragma once

#include <stdexcept>
#include <string>

namespace proxi {

// Every recoverable failure carries a short stable name next to the human
// message; the CLI prints the name and maps it onto an exit code, and the
// study engine logs it per replication.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
  throw Error(std::move(name), message);
}

}  // namespace proxi

#pragma once

#include <stdexcept>
#include <string>

namespace debate {

// Conditioning on an event no supported world satisfies.
class ZeroProbabilityEvent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A revealed value the evidence model assigns no probability to.
class UnsupportedValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPromotedWithin : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AnswersOutsideLambda : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfOrderBit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UntruthfulBit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid scenario configuration. `path()` names the offending field,
// e.g. "question.base.k".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace debate

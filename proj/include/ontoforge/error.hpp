#ifndef ONTOFORGE_ERROR_HPP
#define ONTOFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ontoforge {

// Failure categories surfaced to callers and to the CLI exit path.
enum class ErrorKind {
  ingest,
  empty_corpus,
  parse,
  validation,
  undefined_evidence,
  provider_inconsistency,
  internal_consistency,
  empty_input,
  metric_unavailable,
  dependency,
  usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ingest: return "ingest";
    case ErrorKind::empty_corpus: return "empty-corpus";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::undefined_evidence: return "undefined-evidence";
    case ErrorKind::provider_inconsistency: return "provider-inconsistency";
    case ErrorKind::internal_consistency: return "internal-consistency";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::metric_unavailable: return "metric-unavailable";
    case ErrorKind::dependency: return "dependency";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

}  // namespace ontoforge

#endif

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maskstego {

/// Failure categories surfaced by the library. The CLI maps each one onto a
/// stable exit code, so new kinds must be appended, never reordered.
enum class ErrorKind {
  bounds,            // index outside a sequence or plan
  contract,          // caller violated a precondition (e.g. predicting an unmasked slot)
  capacity,          // message does not fit the available masked positions
  truncated_stream,  // header promises more bits than were recovered
  degenerate_set,    // fewer than two candidates handed to a codebook builder
  desync,            // extractor saw a token outside the rebuilt codebook
  transport,         // inference service unreachable (retryable)
  protocol,          // inference service replied with something malformed
  determinism,       // inference service changed its answer or model digest
  config,            // invalid configuration or key material
  io,                // file could not be read or written
  format,            // malformed hex/base64/bit-string input
  undefined_payload, // bpw requested over a text with no countable words
  internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace maskstego

#pragma once

#include <stdexcept>
#include <string>

namespace gpdc {

enum class ErrorCode {
  parameter,
  dimension,
  insufficient_points,
  degenerate_neighborhood,
  degenerate_cloud,
  precondition,
  matrix,
  size,
  io,
  parse,
  data,
  numerics,
  orientation,
};

/// Base class for all library errors. Carries a stable code so the C
/// boundary can translate without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& w) : Error(ErrorCode::parameter, w) {}
};
struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error(ErrorCode::dimension, w) {}
};
struct InsufficientPoints : Error {
  explicit InsufficientPoints(const std::string& w) : Error(ErrorCode::insufficient_points, w) {}
};
struct DegenerateNeighborhood : Error {
  explicit DegenerateNeighborhood(const std::string& w)
      : Error(ErrorCode::degenerate_neighborhood, w) {}
};
struct DegenerateCloud : Error {
  explicit DegenerateCloud(const std::string& w) : Error(ErrorCode::degenerate_cloud, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorCode::precondition, w) {}
};
struct MatrixError : Error {
  explicit MatrixError(const std::string& w) : Error(ErrorCode::matrix, w) {}
};
struct SizeError : Error {
  explicit SizeError(const std::string& w) : Error(ErrorCode::size, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::io, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::parse, w) {}
};
struct DataError : Error {
  explicit DataError(const std::string& w) : Error(ErrorCode::data, w) {}
};
struct NumericsError : Error {
  explicit NumericsError(const std::string& w) : Error(ErrorCode::numerics, w) {}
};

}  // namespace gpdc

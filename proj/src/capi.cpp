#include "qstirling/qstirling.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qstirling/error.hpp"
#include "qstirling/table.hpp"
#include "qstirling/verify.hpp"

struct qs_poly {
  qstirling::QPoly value;
};

struct qs_report {
  qstirling::VerifyReport value;
};

namespace {

thread_local std::string last_error;

qs_status status_of(qstirling::ErrorCode code) {
  using qstirling::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return QS_INVALID_ARGUMENT;
    case ErrorCode::BoundExceeded: return QS_BOUND_EXCEEDED;
    case ErrorCode::DivisionByZero: return QS_DIVISION_BY_ZERO;
    case ErrorCode::NonzeroRemainder: return QS_NONZERO_REMAINDER;
    case ErrorCode::ParityViolation: return QS_PARITY_VIOLATION;
    case ErrorCode::PoleInRange: return QS_POLE_IN_RANGE;
    case ErrorCode::InvalidWeight: return QS_INVALID_WEIGHT;
    case ErrorCode::RangeViolation: return QS_RANGE_VIOLATION;
  }
  return QS_INTERNAL;
}

qs_status fail(qs_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
qs_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return QS_OK;
  } catch (const qstirling::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QS_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qstirling::StirlingKind kind_of(int kind) {
  if (kind != 1 && kind != 2) throw qstirling::Error(qstirling::ErrorCode::InvalidArgument, "kind must be 1 or 2");
  return static_cast<qstirling::StirlingKind>(kind);
}

qstirling::Method method_of(const char* method) {
  return method == nullptr ? qstirling::Method::Closed : qstirling::parse_method(method);
}

}  // namespace

extern "C" {

const char* qs_status_message(qs_status status) {
  switch (status) {
    case QS_OK: return "ok";
    case QS_INVALID_ARGUMENT: return "invalid argument";
    case QS_BOUND_EXCEEDED: return "enumeration bound exceeded";
    case QS_DIVISION_BY_ZERO: return "division by zero";
    case QS_NONZERO_REMAINDER: return "nonzero remainder in exact division";
    case QS_PARITY_VIOLATION: return "parity violation";
    case QS_POLE_IN_RANGE: return "pole within the terminating range";
    case QS_INVALID_WEIGHT: return "invalid path weight";
    case QS_RANGE_VIOLATION: return "parameter out of range";
    case QS_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qs_last_error(void) { return last_error.c_str(); }

void qs_string_free(char* s) { std::free(s); }

qs_status qs_stirling(int kind, int n, int k, const char* method, qs_poly** out) {
  if (out == nullptr) return fail(QS_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    auto value = qstirling::stirling_value(kind_of(kind), n, k, method_of(method));
    *out = new qs_poly{std::move(value)};
  });
}

qs_status qs_poly_parse(const char* text, qs_poly** out) {
  if (text == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new qs_poly{qstirling::parse_qpoly(text)}; });
}

void qs_poly_free(qs_poly* p) { delete p; }

qs_status qs_poly_to_string(const qs_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(qstirling::to_string(p->value)); });
}

qs_status qs_poly_to_json(const qs_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(qstirling::qpoly_to_json(p->value)); });
}

qs_status qs_poly_eval(const qs_poly* p, long q, char** out) {
  if (p == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(qstirling::poly_eval_int(p->value, q).get_str()); });
}

qs_status qs_poly_degree(const qs_poly* p, long* out) {
  if (p == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  const auto d = p->value.degree();
  *out = d ? static_cast<long>(*d) : -1;
  last_error.clear();
  return QS_OK;
}

int qs_poly_equal(const qs_poly* a, const qs_poly* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value;
}

qs_status qs_table(int kind, int nmax, const char* method, const char* format, char** out) {
  if (format == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto fmt = qstirling::parse_format(format);
    const auto t = qstirling::compute_triangle(kind_of(kind), nmax, method_of(method));
    *out = copy_string(qstirling::render_table(t, fmt));
  });
}

qs_status qs_table_json_to_csv(const char* json, char** out) {
  if (json == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(qstirling::render_csv(qstirling::parse_json_table(json))); });
}

qs_status qs_verify(const char* suite, int nmax, qs_report** out) {
  if (suite == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new qs_report{qstirling::run_suite(qstirling::parse_suite(suite), nmax)}; });
}

void qs_report_free(qs_report* r) { delete r; }

size_t qs_report_total(const qs_report* r) { return r == nullptr ? 0 : r->value.checks.size(); }

size_t qs_report_failed(const qs_report* r) { return r == nullptr ? 0 : r->value.failed(); }

double qs_report_wall_seconds(const qs_report* r) { return r == nullptr ? 0.0 : r->value.wall_seconds; }

qs_status qs_report_to_json(const qs_report* r, char** out) {
  if (r == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(qstirling::report_to_json(r->value)); });
}

qs_status qs_report_to_text(const qs_report* r, char** out) {
  if (r == nullptr || out == nullptr) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(qstirling::report_to_text(r->value)); });
}

}  // extern "C"

#include "sncoeff/report.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>
#include <utility>

namespace sncoeff {

GapReport make_report(std::string label, int k, int m, double lhs, double bound,
                      double tol, std::optional<Complex> witness) {
  GapReport r;
  r.label = std::move(label);
  r.k = k;
  r.m = m;
  r.lhs = lhs;
  r.bound = bound;
  r.slack = bound - lhs;
  r.pass = r.slack >= -tol;
  r.witness = witness;
  return r;
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

std::string csv_row(const GapReport& report) {
  std::string row;
  row.reserve(96);
  row += report.label;
  row += ',';
  row += std::to_string(report.k);
  row += ',';
  row += std::to_string(report.m);
  row += ',';
  row += format_double(report.lhs);
  row += ',';
  row += format_double(report.bound);
  row += ',';
  row += format_double(report.slack);
  row += ',';
  row += report.pass ? "1" : "0";
  row += ',';
  if (report.witness) {
    row += format_double(report.witness->real());
    row += ',';
    row += format_double(report.witness->imag());
  } else {
    row += ',';
  }
  return row;
}

}  // namespace sncoeff

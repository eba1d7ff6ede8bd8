#pragma once

#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ars/errors.hpp"
#include "ars/rational.hpp"
#include "ars/signal.hpp"

namespace ars {

// CSV trace: header "time,x1,...,xn", an initial row at time -inf, then one
// row per value change. Times print as exact rationals.
inline void write_csv(std::ostream& out, const Signal& x) {
  out << "time";
  for (int i = 1; i <= x.width(); ++i) out << ",x" << i;
  out << "\n-inf";
  for (int i = 1; i <= x.width(); ++i)
    out << "," << (x.initial_value().bit(i) ? 1 : 0);
  out << "\n";
  for (const auto& [t, v] : x.switches()) {
    out << t.to_string();
    for (int i = 1; i <= x.width(); ++i) out << "," << (v.bit(i) ? 1 : 0);
    out << "\n";
  }
}

inline Signal read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty CSV trace");
  int width = 0;
  {
    std::stringstream header(line);
    std::string cell;
    if (!std::getline(header, cell, ',') || cell != "time")
      throw Error("CSV trace must start with a 'time' column");
    while (std::getline(header, cell, ',')) ++width;
    if (width < 1) throw Error("CSV trace has no value columns");
  }
  bool have_initial = false;
  BitVector initial = BitVector::zeros(width);
  std::vector<Signal::Switch> raw;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    if (!std::getline(row, cell, ',')) throw Error("bad CSV row: " + line);
    const bool is_initial = cell == "-inf";
    Rational t;
    if (!is_initial) t = Rational::parse(cell);
    BitVector v = BitVector::zeros(width);
    for (int i = 1; i <= width; ++i) {
      if (!std::getline(row, cell, ','))
        throw Error("CSV row has too few columns: " + line);
      if (cell == "1")
        v = v.with_bit(i, true);
      else if (cell != "0")
        throw Error("bad CSV value '" + cell + "'");
    }
    if (is_initial) {
      if (have_initial) throw Error("duplicate -inf row in CSV trace");
      initial = v;
      have_initial = true;
    } else {
      raw.emplace_back(t, v);
    }
  }
  if (!have_initial) throw Error("CSV trace is missing the -inf row");
  return Signal(initial, raw);
}

// VCD trace. VCD timestamps are integers, so rational switch times are
// scaled by the least common denominator L of all event times; the header
// records L in a $comment so that tick/L recovers the exact rational time.
inline void write_vcd(std::ostream& out, const Signal& x,
                      const std::string& name = "x") {
  std::int64_t denom = 1;
  for (const auto& [t, v] : x.switches()) denom = std::lcm(denom, t.den());
  out << "$comment tick_denominator " << denom << " $end\n";
  out << "$timescale 1 ns $end\n";
  out << "$scope module ars $end\n";
  out << "$var wire " << x.width() << " ! " << name << " $end\n";
  out << "$upscope $end\n";
  out << "$enddefinitions $end\n";
  out << "$dumpvars\nb" << x.initial_value().to_string() << " !\n$end\n";
  for (const auto& [t, v] : x.switches()) {
    const Rational tick = t * Rational(denom);
    out << "#" << tick.num() << "\n";
    out << "b" << v.to_string() << " !\n";
  }
}

inline Signal read_vcd(std::istream& in) {
  std::int64_t denom = 1;
  int width = 0;
  bool have_initial = false;
  bool have_time = false;
  Rational current_time;
  BitVector initial = BitVector::zeros(1);
  std::vector<Signal::Switch> raw;

  std::string token;
  while (in >> token) {
    if (token == "$comment") {
      std::string key;
      if (in >> key && key == "tick_denominator") in >> denom;
      while (in >> token && token != "$end") {
      }
    } else if (token == "$var") {
      std::string kind;
      in >> kind >> width;
      while (in >> token && token != "$end") {
      }
      if (width < 1) throw Error("bad VCD var width");
    } else if (token[0] == '#') {
      const std::int64_t tick = Rational::parse(token.substr(1)).num();
      current_time = Rational(tick, denom);
      have_time = true;
    } else if (token[0] == 'b') {
      const BitVector v = BitVector::parse(token.substr(1));
      std::string id;
      in >> id;
      if (!have_time) {
        initial = v;
        have_initial = true;
      } else {
        raw.emplace_back(current_time, v);
      }
    }
  }
  if (!have_initial) throw Error("VCD trace is missing its initial dump");
  return Signal(initial, raw);
}

}  // namespace ars

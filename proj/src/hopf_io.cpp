#include "nisub/hopf_io.hpp"

#include "nisub/error.hpp"
#include "line_reader.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace nisub {

void write_hopf(std::ostream& out, const HopfAlgebra& h) {
  const size_t n = h.dim();
  out << "nisub-hopf 1\n";
  out << "name " << h.name() << "\n";
  out << "dim " << n << "\n";
  for (size_t i = 0; i < n; ++i) out << "label " << i << " " << h.label(i) << "\n";
  for (size_t i = 0; i < n; ++i) {
    if (sgn(h.unit()[i]) != 0) out << "unit " << i << " " << to_string(h.unit()[i]) << "\n";
  }
  for (size_t i = 0; i < n; ++i) {
    if (sgn(h.counit()[i]) != 0) out << "counit " << i << " " << to_string(h.counit()[i]) << "\n";
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : h.product(i, j)) out << "mult " << i << " " << j << " " << k << " " << to_string(c) << "\n";
  for (size_t i = 0; i < n; ++i)
    for (const auto& [key, c] : h.coproduct(i))
      out << "comult " << i << " " << key.first << " " << key.second << " " << to_string(c) << "\n";
  for (size_t i = 0; i < n; ++i)
    for (const auto& [j, c] : h.antipode_of(i)) out << "antipode " << i << " " << j << " " << to_string(c) << "\n";
  for (size_t i = 0; i < n; ++i)
    for (const auto& [j, c] : h.star_of(i)) out << "star " << i << " " << j << " " << to_string(c) << "\n";
  out << "end\n";
}

namespace {

using detail::LineReader;

size_t parse_index(const std::string& w, size_t bound, size_t line) {
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(w, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an index, got '" + w + "'", line);
  }
  if (pos != w.size() || w[0] == '-') throw ParseError("expected an index, got '" + w + "'", line);
  if (v >= bound) throw ParseError("index " + w + " out of range", line);
  return v;
}

Rational parse_coeff(const std::string& w, size_t line) {
  try {
    return parse_rational(w);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad coefficient: ") + e.what(), line);
  }
}

}  // namespace

HopfAlgebra read_hopf(std::istream& in) {
  LineReader r{in};
  std::vector<std::string> w;
  if (!r.next(w) || w.size() != 2 || w[0] != "nisub-hopf") throw ParseError("expected header 'nisub-hopf 1'", r.line);
  if (w[1] != "1") throw ParseError("unsupported format version " + w[1], r.line);
  HopfAlgebra::Data d;
  size_t n = 0;
  bool ended = false;
  while (r.next(w)) {
    const std::string& key = w[0];
    auto need = [&](size_t count) {
      if (w.size() != count) throw ParseError("'" + key + "' expects " + std::to_string(count - 1) + " fields", r.line);
    };
    if (key == "end") {
      ended = true;
      break;
    }
    if (key == "name") {
      d.name = detail::join_from(w, 1);
      continue;
    }
    if (key == "dim") {
      need(2);
      if (n != 0) throw ParseError("duplicate 'dim'", r.line);
      n = parse_index(w[1], static_cast<size_t>(-1), r.line);
      if (n == 0) throw ParseError("dimension must be positive", r.line);
      d.dim = n;
      d.mult.resize(n * n);
      d.comult.resize(n);
      d.antipode.resize(n);
      d.star.resize(n);
      d.unit = zero_vector(n);
      d.counit = zero_vector(n);
      d.labels.resize(n);
      for (size_t i = 0; i < n; ++i) d.labels[i] = "e" + std::to_string(i);
      continue;
    }
    if (n == 0) throw ParseError("'" + key + "' before 'dim'", r.line);
    if (key == "label") {
      if (w.size() < 3) throw ParseError("'label' expects an index and a name", r.line);
      d.labels[parse_index(w[1], n, r.line)] = detail::join_from(w, 2);
    } else if (key == "unit" || key == "counit") {
      need(3);
      (key == "unit" ? d.unit : d.counit)[parse_index(w[1], n, r.line)] += parse_coeff(w[2], r.line);
    } else if (key == "mult") {
      need(5);
      size_t i = parse_index(w[1], n, r.line), j = parse_index(w[2], n, r.line), k = parse_index(w[3], n, r.line);
      d.mult[i * n + j].emplace_back(static_cast<uint32_t>(k), parse_coeff(w[4], r.line));
    } else if (key == "comult") {
      need(5);
      size_t i = parse_index(w[1], n, r.line), j = parse_index(w[2], n, r.line), k = parse_index(w[3], n, r.line);
      d.comult[i][{static_cast<uint32_t>(j), static_cast<uint32_t>(k)}] += parse_coeff(w[4], r.line);
    } else if (key == "antipode" || key == "star") {
      need(4);
      size_t i = parse_index(w[1], n, r.line), j = parse_index(w[2], n, r.line);
      (key == "antipode" ? d.antipode : d.star)[i].emplace_back(static_cast<uint32_t>(j), parse_coeff(w[3], r.line));
    } else {
      throw ParseError("unknown record '" + key + "'", r.line);
    }
  }
  if (n == 0) throw ParseError("missing 'dim'", r.line);
  if (!ended) throw ParseError("missing 'end'", r.line);
  return HopfAlgebra(std::move(d));
}

}  // namespace nisub

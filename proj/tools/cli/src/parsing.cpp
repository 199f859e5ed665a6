#include "parsing.hpp"

#include <charconv>
#include <cmath>
#include <string_view>

#include "oscillent/errors.hpp"

namespace oscillent::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    parts.emplace_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

double to_double(const std::string& field, const std::string& context) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw DomainError("cannot parse number '" + field + "' in " + context);
  }
  return value;
}

int to_int(const std::string& field, const std::string& context) {
  int value = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw DomainError("cannot parse integer '" + field + "' in " + context);
  }
  return value;
}

std::vector<std::string> fields(const std::string& body, std::size_t expected,
                                const std::string& context) {
  auto parts = split(body, ',');
  if (parts.size() != expected) {
    throw DomainError(context + " expects " + std::to_string(expected) + " comma-separated values");
  }
  return parts;
}

}  // namespace

bool is_theta_state(const std::string& text) { return text.rfind("theta:", 0) == 0; }

StateSpec parse_state(const std::string& text, double theta) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
  const std::string context = "state '" + text + "'";

  if (kind == "coherent") {
    if (body.empty()) return CoherentState{};
    const auto f = fields(body, 4, context);
    return CoherentState{{to_double(f[0], context), to_double(f[1], context)},
                         {to_double(f[2], context), to_double(f[3], context)}};
  }
  if (kind == "number") {
    const auto f = fields(body, 2, context);
    return NumberState{to_int(f[0], context), to_int(f[1], context)};
  }
  if (kind == "unbound") {
    const auto f = split(body, ',');
    if (f.size() != 1 && f.size() != 2) throw DomainError(context + " expects m[,tau]");
    return UnboundGaussian{to_int(f[0], context), f.size() == 2 ? to_double(f[1], context) : 0.0};
  }
  if (kind == "sup") {
    std::vector<SuperpositionTerm> terms;
    for (const auto& item : split(body, ';')) {
      const auto f = split(item, ',');
      if (f.size() != 3 && f.size() != 4) {
        throw DomainError(context + ": each term is m,n,re[,im]");
      }
      const double im = f.size() == 4 ? to_double(f[3], context) : 0.0;
      terms.push_back({to_int(f[0], context), to_int(f[1], context), {to_double(f[2], context), im}});
    }
    return Superposition::normalized(std::move(terms));
  }
  if (kind == "theta") {
    const auto items = split(body, ';');
    if (items.size() != 2) throw DomainError(context + " expects m1,n1;m2,n2");
    const auto a = fields(items[0], 2, context);
    const auto b = fields(items[1], 2, context);
    return Superposition{{{to_int(a[0], context), to_int(a[1], context), std::cos(theta)},
                          {to_int(b[0], context), to_int(b[1], context), std::sin(theta)}}};
  }
  throw DomainError("unknown state kind '" + kind +
                    "' (expected coherent, number, sup, unbound or theta)");
}

std::vector<double> SweepRange::values() const {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double f = double(i) / (count - 1);
    out[i] = logarithmic ? start * std::pow(stop / start, f)
                         : (start * (count - 1 - i) + stop * i) / (count - 1);
  }
  out.back() = stop;
  return out;
}

SweepRange parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 && parts.size() != 4) {
    throw DomainError("range '" + text + "' must be start:stop:count[:lin|log]");
  }
  SweepRange range;
  range.start = to_double(parts[0], "range");
  range.stop = to_double(parts[1], "range");
  range.count = to_int(parts[2], "range");
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      range.logarithmic = true;
    } else if (parts[3] != "lin") {
      throw DomainError("range spacing must be lin or log");
    }
  }
  if (range.count < 2) throw DomainError("range needs count >= 2");
  if (range.logarithmic && !(range.start > 0.0 && range.stop > 0.0)) {
    throw DomainError("logarithmic range needs positive endpoints");
  }
  return range;
}

}  // namespace oscillent::cli

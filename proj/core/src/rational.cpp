#include "freeprob/rational.hpp"

#include <cctype>

#include "freeprob/error.hpp"

namespace freeprob {

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw ParseError("malformed rational: " + text);
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
  }

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.empty()) throw ParseError("malformed decimal: " + text);
    bool neg = !whole.empty() && whole[0] == '-';
    const std::string wdigits = (neg || (!whole.empty() && whole[0] == '+'))
                                    ? whole.substr(1)
                                    : whole;
    Int scale(1);
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int value = Int(wdigits.empty() ? "0" : wdigits) * scale + Int(frac);
    Rat r(value, scale);
    r.canonicalize();
    if (neg) r = -r;
    return r;
  }

  return Rat(Int(s));
}

}  // namespace freeprob

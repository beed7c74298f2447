#include "prothx/natural.hpp"

#include <cctype>

namespace prothx {

std::optional<Natural> parse_natural(std::string_view text, bool allow_hex) {
  if (text.empty()) return std::nullopt;

  int base = 10;
  std::string_view digits = text;
  if (allow_hex && text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    digits = text.substr(2);
  }

  for (char c : digits) {
    const bool ok = (base == 10) ? (std::isdigit(static_cast<unsigned char>(c)) != 0)
                                 : (std::isxdigit(static_cast<unsigned char>(c)) != 0);
    if (!ok) return std::nullopt;
  }

  Natural value;
  if (mpz_set_str(value.get_mpz_t(), std::string(digits).c_str(), base) != 0) {
    return std::nullopt;
  }
  return value;
}

}  // namespace prothx

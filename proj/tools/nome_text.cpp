#include "nome_text.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <string>

namespace ramanujan::cli {

Nome parse_nome(std::string_view text, const PrecisionContext& ctx) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += static_cast<char>(std::tolower(c));

  static const std::regex exponential(
      R"(^(?:exp\(|e\^\(?)-pi\*sqrt\(([0-9./e+-]+)\)\)?$)");
  std::smatch m;
  if (std::regex_match(compact, m, exponential)) {
    const std::string inner = m[1];
    const bool open_paren = compact.starts_with("exp(") || compact.starts_with("e^(");
    if (open_paren != compact.ends_with("))"))
      throw std::invalid_argument("unbalanced parentheses in nome '" + std::string(text) + "'");
    return nome_from_n(parse_rational(inner), ctx);
  }
  try {
    return Nome(BigReal::parse(ctx, compact), ctx);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot read nome '" + std::string(text) +
                                "'; expected a decimal or exp(-pi*sqrt(r))");
  }
}

}  // namespace ramanujan::cli

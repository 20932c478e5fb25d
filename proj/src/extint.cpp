#include "stabregion/extint.hpp"

namespace stabreg {

ExtInt parse_extint(const std::string& text) {
    if (text == "inf" || text == "+inf") return ExtInt::inf();
    return ExtInt(parse_int(text));
}

std::string format_extint(const ExtInt& e) {
    return e.finite() ? e.value().str() : std::string("inf");
}

}  // namespace stabreg

#include "eml/gaussian.hpp"

namespace eml {

std::string GaussianRational::to_string() const {
  if (im == 0) return re.get_str();
  std::string i_part = im.get_str() + "i";
  if (re == 0) return i_part;
  return im > 0 ? re.get_str() + "+" + i_part : re.get_str() + i_part;
}

}  // namespace eml

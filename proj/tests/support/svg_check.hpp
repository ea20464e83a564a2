#pragma once

#include <map>
#include <string>
#include <vector>

namespace qualcube::testing {

struct XmlElement {
  std::string name;
  std::map<std::string, std::string> attributes;
};

// Result of a strict well-formedness scan over one XML document.
struct XmlScan {
  bool well_formed = false;
  std::string error;
  std::vector<XmlElement> elements;  // document order, opening tags only
};

// Checks tag balance, attribute quoting, entity references, and the
// single-root rule. No DTD, namespaces beyond literal names, or CDATA.
XmlScan scan_xml(const std::string& text);

std::size_t count_elements(const XmlScan& scan, const std::string& name);

// Elements whose class attribute contains cls as a whitespace-separated word.
std::size_t count_with_class(const XmlScan& scan, const std::string& name,
                             const std::string& cls);

// All data-value attribute values in document order.
std::vector<std::string> data_values(const XmlScan& scan);

}  // namespace qualcube::testing

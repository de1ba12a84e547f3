// Reads a CLI output document and checks that parse -> emit reproduces it byte for byte.
#include <fstream>
#include <iostream>
#include <sstream>

#include "wres/output.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: json_roundtrip <document.json>\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string again = wres::toJson(wres::documentFromJson(nlohmann::ordered_json::parse(text))).dump(2) + "\n";
  if (again != text) {
    std::cerr << "round trip differs:\n" << again;
    return 1;
  }
  std::cout << "round trip identical (" << text.size() << " bytes)\n";
  return 0;
}

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "ltlf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string stdin_text;
  for (const auto& a : args)
    if (a == "-") {
      stdin_text.assign(std::istreambuf_iterator<char>(std::cin),
                        std::istreambuf_iterator<char>());
      break;
    }
  ltlf::CliResult result = ltlf::run_cli(std::move(args), stdin_text);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

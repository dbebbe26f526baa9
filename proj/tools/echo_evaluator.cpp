// Reference evaluator for the subprocess protocol.
//
// Reads one JSON request per line and answers with every numeric parameter
// echoed back as a metric of the same name, plus f = sum of squares.
//
//   --crash-after N   exit(3) without replying to request N+1
//   --fail-every N    reply with an "error" field on every N-th request
//   --garbage-after N reply with a non-JSON line to request N+1

#include <cstdlib>
#include <iostream>
#include <string>

#include "shapebench/json.hpp"

int main(int argc, char** argv) {
  long crash_after = -1, fail_every = 0, garbage_after = -1;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    const long v = std::strtol(argv[i + 1], nullptr, 10);
    if (flag == "--crash-after") {
      crash_after = v;
    } else if (flag == "--fail-every") {
      fail_every = v;
    } else if (flag == "--garbage-after") {
      garbage_after = v;
    } else {
      std::cerr << "echo_evaluator: unknown flag " << flag << "\n";
      return 2;
    }
  }
  std::ios::sync_with_stdio(false);
  std::string line;
  long served = 0;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    if (crash_after >= 0 && served >= crash_after) std::_Exit(3);
    if (garbage_after >= 0 && served >= garbage_after) {
      std::cout << "this is not json" << std::endl;
      ++served;
      continue;
    }
    shapebench::Json reply;
    try {
      const auto req = shapebench::Json::parse(line);
      reply["id"] = req.at("id");
      ++served;
      if (fail_every > 0 && served % fail_every == 0) {
        reply["error"] = "requested failure";
      } else {
        shapebench::Json metrics = shapebench::Json::object();
        double f = 0.0;
        for (const auto& [k, v] : req.at("params").items()) {
          if (v.is_number()) {
            metrics[k] = v;
            f += v.get<double>() * v.get<double>();
          }
        }
        metrics["f"] = f;
        reply["metrics"] = metrics;
      }
    } catch (const std::exception& e) {
      reply["id"] = nullptr;
      reply["error"] = std::string("bad request: ") + e.what();
    }
    std::cout << reply.dump() << std::endl;
  }
  return 0;
}

#include <cstdlib>
#include <iostream>

#include "psigma/acceptance.hpp"
#include "psigma/parallel.hpp"

int main()
{
  char const *dir = std::getenv("PSIGMA_CACHE_DIR");
  psigma::TableStore tables(dir ? dir : "", psigma::Limits{},
                            psigma::default_thread_count());
  int failed = 0;
  psigma::acceptance::run_all(tables, [&](auto const &r) {
    std::cout << psigma::acceptance::format_line(r) << std::endl;
    if (!r.passed)
      ++failed;
  });
  std::cout << (psigma::acceptance::criterion_count - failed) << "/"
            << psigma::acceptance::criterion_count << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

#include <cstdio>

int main() {
  std::puts("ader1d cli placeholder");
  return 0;
}

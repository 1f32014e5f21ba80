// Placeholder during bring-up; the full acceptance suite lands once the
// catalog and sweeps are wired.
#include <cstdio>
int main() {
    std::printf("acceptance suite pending\n");
    return 1;
}

#include <cstdio>

int main() {
    std::puts("ordwalk: cli under construction");
    return 1;
}

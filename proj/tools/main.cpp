#include <cstdio>
int main(){ std::puts("thermx"); return 0; }

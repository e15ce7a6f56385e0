#include <cstdio>
int main(){ std::puts("stripcut placeholder"); return 0; }

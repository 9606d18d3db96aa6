#include <iostream>
int main() { std::cout << "spweb\n"; }

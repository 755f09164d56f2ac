// placeholder main, replaced once the solver stack is in
int main() { return 0; }

package p;

class Careful {
  void parse() {
    try {
      ping();
    } catch (RuntimeException e) {
      // malformed input is expected here; fall through to the default
    }
    try {
      ping();
    } catch (RuntimeException e) {
      recover();
    }
  }

  void ping() {}

  void recover() {}
}

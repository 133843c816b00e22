package p;

class Sloppy {
  Utils utilInstance = new Utils();

  Utils getUtils() { return utilInstance; }

  void run() {
    utilInstance.doWork();
    int n = utilInstance.LIMIT;
    getUtils().doWork();
    use(n);
  }

  void use(int n) {}
}
